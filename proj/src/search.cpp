#include "cyclemax/search.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cyclemax/bounds.hpp"
#include "cyclemax/canonical.hpp"
#include "cyclemax/errors.hpp"
#include "cyclemax/generation.hpp"

namespace cyclemax {

namespace {

constexpr std::size_t kMaxListed = 50;

/// Canonical graph6 -> canonical graph, kept sorted by the string.
using WitnessSet = std::map<std::string, SimpleGraph>;

void add_witness(WitnessSet& set, const SimpleGraph& g) {
    SimpleGraph canonical = canonical_graph(g);
    std::string key = to_graph6(canonical);
    set.emplace(std::move(key), std::move(canonical));
}

void store_witnesses(ExtremalResult& result, const WitnessSet& set) {
    result.witnesses.clear();
    result.witness_graph6.clear();
    for (const auto& [key, graph] : set) {
        result.witness_graph6.push_back(key);
        result.witnesses.push_back(graph);
    }
}

SimpleGraph without_isolated(const SimpleGraph& g) {
    std::vector<Vertex> label(g.order(), -1);
    int next = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0)
            label[v] = next++;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        edges.push_back({label[e.u], label[e.v]});
    return SimpleGraph(next, edges);
}

/// Counts every graph and keeps those attaining the running maximum.
void scan(const std::vector<Masks>& graphs, Count& best, bool& have, WitnessSet& witnesses,
          SearchStats& stats) {
    for (const Masks& g : graphs) {
        ++stats.counted;
        const Count c(static_cast<unsigned long>(count_cycles_masks(g)));
        if (!have || c > best) {
            best = c;
            have = true;
            witnesses.clear();
        }
        if (c == best)
            add_witness(witnesses, SimpleGraph::from_masks(g));
    }
}

void tally(const GenerationResult& generated, SearchStats& stats) {
    for (const auto& level : generated.levels)
        stats.generated += level.size();
    stats.expansions += generated.expansions;
}

} // namespace

ExtremalResult extremal_search(int m, const SearchOptions& options) {
    if (m < kSearchMinEdges || m > kSearchMaxEdges)
        throw CapacityError("extremal search supports " + std::to_string(kSearchMinEdges) +
                            " <= m <= " + std::to_string(kSearchMaxEdges) + ", got " +
                            std::to_string(m));
    ExtremalResult result;
    result.m = m;
    result.n_min = 3;
    result.n_max = m;
    const bool min_degree_three = options.prune_min_degree && m > 7;
    result.min_degree_used = min_degree_three ? 3 : 2;
    result.max_degree_pruned = options.prune_max_degree;

    WitnessSet witnesses;
    bool have = false;
    for (int n = result.n_min; n <= result.n_max; ++n) {
        GenerationOptions gen;
        gen.order = n;
        gen.edges = m;
        gen.min_degree = result.min_degree_used;
        gen.max_degree = options.prune_max_degree ? 11 : -1;
        gen.connected = true;
        gen.workers = options.workers;
        const GenerationResult generated = generate_levels(gen);
        tally(generated, result.stats);
        scan(generated.levels.back(), result.cmax, have, witnesses, result.stats);
    }
    if (!have)
        throw std::logic_error("search found no graph");

    if (!min_degree_three && m - 1 >= kSearchMinEdges) {
        const ExtremalResult smaller = extremal_search(m - 1, options);
        result.stats.generated += smaller.stats.generated;
        result.stats.expansions += smaller.stats.expansions;
        result.stats.counted += smaller.stats.counted;
        if (smaller.cmax > result.cmax)
            throw std::logic_error("C(m-1) exceeds C(m)");
        if (smaller.cmax == result.cmax) {
            const std::size_t before = witnesses.size();
            for (const SimpleGraph& w : smaller.witnesses) {
                for (Vertex v = 0; v < w.order(); ++v) {
                    const Edge leaf{v, w.order()};
                    add_witness(witnesses, w.extended(1, std::span<const Edge>(&leaf, 1)));
                }
            }
            result.pendant_witnesses = witnesses.size() - before;
        }
    }
    store_witnesses(result, witnesses);
    return result;
}

ExtremalResult exhaustive_search(int m, int workers) {
    if (m < 1 || m > kExhaustiveMaxEdges)
        throw CapacityError("exhaustive search supports 1 <= m <= " +
                            std::to_string(kExhaustiveMaxEdges));
    ExtremalResult result;
    result.m = m;
    result.n_min = 2;
    result.n_max = 2 * m;
    result.min_degree_used = 0;

    // Each graph without isolated vertices appears once, padded to 2m vertices.
    GenerationOptions gen;
    gen.order = 2 * m;
    gen.edges = m;
    gen.workers = workers;
    const GenerationResult generated = generate_levels(gen);
    tally(generated, result.stats);

    WitnessSet padded;
    bool have = false;
    scan(generated.levels.back(), result.cmax, have, padded, result.stats);
    WitnessSet witnesses;
    for (const auto& entry : padded)
        add_witness(witnesses, without_isolated(entry.second));
    store_witnesses(result, witnesses);
    return result;
}

CorpusReport verify_bounds_on_corpus(int nmax, int workers) {
    if (nmax > kCorpusMaxOrder)
        throw CapacityError("corpus verification supports nmax <= " +
                            std::to_string(kCorpusMaxOrder));
    CorpusReport report;
    report.nmax = nmax;
    report.ahrens_lower.name = "ahrens.lower";
    report.ahrens_upper.name = "ahrens.upper";
    report.aldred_thomassen.name = "aldred-thomassen";
    report.new_bound.name = "new";
    report.ahrens_lower.extreme_ratio = 1e300;

    auto violation = [&](BoundCheck& check, const std::string& g6) {
        ++check.violations;
        if (report.violations.size() < kMaxListed)
            report.violations.push_back(check.name + ": " + g6);
    };
    auto tight = [](BoundCheck& check, const std::string& g6) {
        if (check.tight.size() < kMaxListed)
            check.tight.push_back(g6);
    };

    for (int n = 1; n <= nmax; ++n) {
        GenerationOptions gen;
        gen.order = n;
        gen.edges = n * (n - 1) / 2;
        gen.workers = workers;
        const GenerationResult generated = generate_levels(gen);
        for (const auto& level : generated.levels) {
            for (const Masks& masks : level) {
                if (mask_component_count(masks) != 1)
                    continue;
                ++report.graphs;
                const SimpleGraph g = SimpleGraph::from_masks(masks);
                const std::string g6 = to_graph6(g);
                const Count c(static_cast<unsigned long>(count_cycles_masks(masks)));
                const auto m = static_cast<std::uint64_t>(g.size());

                const AhrensBounds a = ahrens(n, m, 1);
                ++report.ahrens_lower.checked;
                if (c < a.lower)
                    violation(report.ahrens_lower, g6);
                if (a.lower > 0) {
                    report.ahrens_lower.extreme_ratio = std::min(
                        report.ahrens_lower.extreme_ratio, c.get_d() / a.lower.get_d());
                    if (c == a.lower)
                        tight(report.ahrens_lower, g6);
                }
                ++report.ahrens_upper.checked;
                if (c > a.upper)
                    violation(report.ahrens_upper, g6);
                if (a.upper > 0) {
                    report.ahrens_upper.extreme_ratio = std::max(
                        report.ahrens_upper.extreme_ratio, c.get_d() / a.upper.get_d());
                    if (c == a.upper)
                        tight(report.ahrens_upper, g6);
                }

                const mpq_class at = aldred_thomassen(n, m);
                ++report.aldred_thomassen.checked;
                if (mpq_class(c) > at)
                    violation(report.aldred_thomassen, g6);
                report.aldred_thomassen.extreme_ratio =
                    std::max(report.aldred_thomassen.extreme_ratio, c.get_d() / at.get_d());
                if (mpq_class(c) == at)
                    tight(report.aldred_thomassen, g6);

                if (n >= 2) {
                    const auto stats = degree_stats(g);
                    const BoundValue b = new_bound(make_bound_params(n, m, stats.max_degree));
                    ++report.new_bound.checked;
                    const bool below = b.exact ? mpq_class(c) < *b.exact : b.strictly_above(c);
                    if (!below)
                        violation(report.new_bound, g6);
                    const double value = b.exact ? b.exact->get_d() : b.value.approx();
                    if (value > 0)
                        report.new_bound.extreme_ratio =
                            std::max(report.new_bound.extreme_ratio, c.get_d() / value);
                }
            }
        }
    }
    if (report.ahrens_lower.extreme_ratio == 1e300)
        report.ahrens_lower.extreme_ratio = 0.0;
    return report;
}

} // namespace cyclemax
