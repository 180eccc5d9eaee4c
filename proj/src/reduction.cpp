#include "cyclemax/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "cyclemax/errors.hpp"

namespace cyclemax {

namespace {

constexpr int kMaxRestarts = 100'000;

mpq_class deletion_guarantee(int k, const Count& total) {
    mpq_class fraction(6 * (2 * k - 7), k * (k - 1));
    fraction.canonicalize();
    return (mpq_class(1) - fraction) * mpq_class(total);
}

mpq_class partition_guarantee(int k, const Count& total) {
    mpq_class fraction(3 * k * k - 4, 4 * k * (k - 1));
    fraction.canonicalize();
    return fraction * mpq_class(total);
}

mpz_class binomial(unsigned long n, unsigned long r) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, r);
    return out;
}

mpz_class multinomial(int k, const std::array<int, 4>& sizes) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    for (int a : sizes) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(a));
        out /= f;
    }
    return out;
}

/// Local search over deletion sets: swap a member for a non-member while
/// that strictly increases the retained weight.
void improve_deletion(const PairWeights& w, std::array<int, 6>& d, Count& retained) {
    const int k = w.size();
    bool moved = true;
    while (moved) {
        moved = false;
        for (int slot = 0; slot < 6 && !moved; ++slot) {
            for (int candidate = 0; candidate < k && !moved; ++candidate) {
                if (std::find(d.begin(), d.end(), candidate) != d.end())
                    continue;
                auto trial = d;
                trial[slot] = candidate;
                std::sort(trial.begin(), trial.end());
                Count value = retained_weight(w, trial);
                if (value > retained) {
                    d = trial;
                    retained = value;
                    moved = true;
                }
            }
        }
    }
}

Count within_weight(const PairWeights& w, const std::vector<int>& part) {
    Count out = 0;
    for (std::size_t a = 0; a < part.size(); ++a)
        for (std::size_t b = a + 1; b < part.size(); ++b)
            out += w.at(part[a], part[b]);
    return out;
}

/// Swap descent: exchange members of two parts while the within-part
/// weight strictly decreases.
void improve_partition(const PairWeights& w, std::array<std::vector<int>, 4>& parts) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int p = 0; p < 4 && !moved; ++p) {
            for (int q = p + 1; q < 4 && !moved; ++q) {
                for (std::size_t i = 0; i < parts[p].size() && !moved; ++i) {
                    for (std::size_t j = 0; j < parts[q].size() && !moved; ++j) {
                        const int a = parts[p][i], b = parts[q][j];
                        Count gain = 0;
                        for (int x : parts[p])
                            if (x != a)
                                gain += w.at(a, x) - w.at(b, x);
                        for (int y : parts[q])
                            if (y != b)
                                gain += w.at(b, y) - w.at(a, y);
                        if (gain > 0) {
                            parts[p][i] = b;
                            parts[q][j] = a;
                            moved = true;
                        }
                    }
                }
            }
        }
    }
    for (auto& part : parts)
        std::sort(part.begin(), part.end());
}

void exhaustive_partition(const PairWeights& w, const std::array<int, 4>& sizes, int index,
                          std::array<std::vector<int>, 4>& current, const Count& within,
                          std::array<std::vector<int>, 4>& best, Count& best_within, bool& found) {
    const int k = w.size();
    if (found && within >= best_within)
        return;
    if (index == k) {
        best = current;
        best_within = within;
        found = true;
        return;
    }
    for (int p = 0; p < 4; ++p) {
        if (static_cast<int>(current[p].size()) == sizes[p])
            continue;
        Count added = within;
        for (int x : current[p])
            added += w.at(x, index);
        current[p].push_back(index);
        exhaustive_partition(w, sizes, index + 1, current, added, best, best_within, found);
        current[p].pop_back();
    }
}

Vertex max_degree_vertex(const SimpleGraph& g) {
    Vertex best = 0;
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(best))
            best = v;
    return best;
}

int max_degree(const SimpleGraph& g) {
    return g.order() == 0 ? 0 : g.degree(max_degree_vertex(g));
}

ReductionStep surgery(const SimpleGraph& g, const SelectionOptions& options,
                      const CountOptions& counting, std::optional<Count> known_before) {
    const Vertex u = max_degree_vertex(g);
    const int k = g.order() == 0 ? 0 : g.degree(u);
    if (k < 12)
        throw PreconditionError("reduction needs maximum degree >= 12, got " + std::to_string(k));

    ReductionStep step;
    step.u = u;
    step.k = k;
    step.weights = pair_weights(g, u, counting);
    step.deletion = select_deletion_set(step.weights, options);

    std::vector<int> kept;
    for (int i = 0; i < k; ++i) {
        if (std::find(step.deletion.deleted.begin(), step.deletion.deleted.end(), i) ==
            step.deletion.deleted.end())
            kept.push_back(i);
        else
            step.deleted_vertices.push_back(step.weights.vertex(i));
    }
    const PairWeights remaining = step.weights.restricted(kept);
    step.partition = select_quadripartition(remaining, options);
    for (int p = 0; p < 4; ++p)
        for (int i : step.partition.parts[p])
            step.part_vertices[p].push_back(remaining.vertex(i));

    auto shifted = [u](Vertex x) { return x > u ? x - 1 : x; };
    const SimpleGraph base = g.without_vertex(u);
    const Vertex first_new = base.order();
    std::vector<Edge> added;
    for (int p = 0; p < 4; ++p) {
        for (Vertex x : step.part_vertices[p])
            added.push_back({shifted(x), first_new + p});
        for (int q = p + 1; q < 4; ++q)
            added.push_back({first_new + p, first_new + q});
    }
    step.result = base.extended(4, added);

    if (step.result.size() != g.size())
        throw std::logic_error("reduction changed the edge count");
    if (options.verify_counts) {
        step.cycles_before = known_before ? *known_before : count_cycles(g, counting);
        step.cycles_after = count_cycles(step.result, counting);
        if (*step.cycles_after <= *step.cycles_before)
            throw std::logic_error("reduction did not increase the cycle count");
    }
    return step;
}

} // namespace

std::array<int, 4> quadripartition_sizes(int k) {
    std::array<int, 4> sizes{};
    for (int l = 1; l <= 4; ++l)
        sizes[l - 1] = (k + l - 1) / 4;
    return sizes;
}

Count retained_weight(const PairWeights& w, const std::array<int, 6>& deleted) {
    Count out = w.total();
    for (int a = 0; a < 6; ++a) {
        out -= w.incident(deleted[a]);
        for (int b = a + 1; b < 6; ++b)
            out += w.at(deleted[a], deleted[b]);
    }
    return out;
}

Count cross_weight(const PairWeights& w, const std::array<std::vector<int>, 4>& parts) {
    Count out = w.total();
    for (const auto& part : parts)
        out -= within_weight(w, part);
    return out;
}

DeletionChoice select_deletion_set(const PairWeights& w, const SelectionOptions& options) {
    const int k = w.size();
    if (k < 6)
        throw DomainError("deletion set needs k >= 6, got " + std::to_string(k));
    DeletionChoice out;
    const Count total = w.total();
    out.guarantee = deletion_guarantee(k, total);

    std::vector<Count> incident(k);
    for (int i = 0; i < k; ++i)
        incident[i] = w.incident(i);

    if (binomial(k, 6) <= mpz_class(std::to_string(options.exhaustive_limit))) {
        out.exhaustive = true;
        std::array<int, 6> d{0, 1, 2, 3, 4, 5};
        bool first = true;
        while (true) {
            Count value = total;
            for (int a = 0; a < 6; ++a) {
                value -= incident[d[a]];
                for (int b = a + 1; b < 6; ++b)
                    value += w.at(d[a], d[b]);
            }
            if (first || value > out.retained) {
                out.deleted = d;
                out.retained = value;
                first = false;
            }
            // Next 6-subset in lexicographic order.
            int slot = 5;
            while (slot >= 0 && d[slot] == k - 6 + slot)
                --slot;
            if (slot < 0)
                break;
            ++d[slot];
            for (int t = slot + 1; t < 6; ++t)
                d[t] = d[t - 1] + 1;
        }
    } else {
        // Start from the six neighbours carrying the least incident weight.
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return incident[a] < incident[b]; });
        std::copy_n(order.begin(), 6, out.deleted.begin());
        std::sort(out.deleted.begin(), out.deleted.end());
        out.retained = retained_weight(w, out.deleted);
        improve_deletion(w, out.deleted, out.retained);

        std::mt19937_64 rng(options.seed);
        for (int attempt = 0; !out.certified(); ++attempt) {
            if (attempt == kMaxRestarts)
                throw std::logic_error("deletion-set search failed to reach its guarantee");
            std::shuffle(order.begin(), order.end(), rng);
            std::array<int, 6> d{};
            std::copy_n(order.begin(), 6, d.begin());
            std::sort(d.begin(), d.end());
            Count value = retained_weight(w, d);
            improve_deletion(w, d, value);
            if (value > out.retained) {
                out.deleted = d;
                out.retained = value;
            }
        }
    }
    if (!out.certified())
        throw std::logic_error("deletion set misses its guarantee");
    return out;
}

Quadripartition select_quadripartition(const PairWeights& w, const SelectionOptions& options) {
    const int k = w.size();
    if (k < 2)
        throw DomainError("quadripartition needs k >= 2, got " + std::to_string(k));
    const auto sizes = quadripartition_sizes(k);
    Quadripartition out;
    const Count total = w.total();
    out.guarantee = partition_guarantee(k, total);

    if (multinomial(k, sizes) <= mpz_class(std::to_string(options.exhaustive_limit))) {
        out.exhaustive = true;
        std::array<std::vector<int>, 4> current;
        Count best_within = 0;
        bool found = false;
        exhaustive_partition(w, sizes, 0, current, Count(0), out.parts, best_within, found);
        out.cross = total - best_within;
    } else {
        std::vector<int> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::mt19937_64 rng(options.seed);
        bool have = false;
        for (int attempt = 0; !have || !out.certified(); ++attempt) {
            if (attempt == kMaxRestarts)
                throw std::logic_error("quadripartition search failed to reach its guarantee");
            std::shuffle(order.begin(), order.end(), rng);
            std::array<std::vector<int>, 4> parts;
            int next = 0;
            for (int p = 0; p < 4; ++p)
                for (int i = 0; i < sizes[p]; ++i)
                    parts[p].push_back(order[next++]);
            improve_partition(w, parts);
            Count cross = cross_weight(w, parts);
            if (!have || cross > out.cross) {
                out.parts = parts;
                out.cross = cross;
                have = true;
            }
        }
    }
    if (!out.certified())
        throw std::logic_error("quadripartition misses its guarantee");
    return out;
}

ReductionStep reduce_max_degree_step(const SimpleGraph& g, const SelectionOptions& options,
                                     const CountOptions& counting) {
    return surgery(g, options, counting, std::nullopt);
}

SimpleGraph reduce_max_degree(const SimpleGraph& g, const SelectionOptions& options) {
    return reduce_max_degree_step(g, options).result;
}

ReductionTrace reduce_to_bounded_degree(const SimpleGraph& g, const SelectionOptions& options,
                                        const CountOptions& counting) {
    ReductionTrace trace;
    trace.result = g;
    std::optional<Count> known;
    const int cap = g.size();
    while (max_degree(trace.result) >= 12) {
        if (static_cast<int>(trace.steps.size()) == cap) {
            trace.completed = false;
            break;
        }
        ReductionStep step = surgery(trace.result, options, counting, known);
        known = step.cycles_after;
        trace.result = step.result;
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

} // namespace cyclemax
