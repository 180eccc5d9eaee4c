#include "cyclemax/generation.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "cyclemax/canonical.hpp"
#include "cyclemax/errors.hpp"

namespace cyclemax {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

Masks canonical_masks(const Masks& adjacency) {
    const auto lab = canonical_labeling(adjacency);
    const int n = static_cast<int>(adjacency.size());
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i)
        position[lab[i]] = i;
    Masks out(n, 0);
    for (int i = 0; i < n; ++i)
        for (std::uint64_t rest = adjacency[lab[i]]; rest; rest &= rest - 1)
            out[i] |= bit(position[std::countr_zero(rest)]);
    return out;
}

/// Whether a graph with `remaining` edges still to add can reach the target.
bool completable(const Masks& g, int remaining, const GenerationOptions& options) {
    int deficiency = 0;
    for (std::uint64_t m : g) {
        const int d = std::popcount(m);
        if (options.max_degree >= 0 && d > options.max_degree)
            return false;
        deficiency += std::max(0, options.min_degree - d);
    }
    if (deficiency > 2 * remaining)
        return false;
    if (options.connected && mask_component_count(g) - 1 > remaining)
        return false;
    return true;
}

bool in_target(const Masks& g, const GenerationOptions& options) {
    return completable(g, 0, options);
}

std::vector<Masks> expand(const std::vector<Masks>& level, std::size_t first, std::size_t stride,
                          int remaining, const GenerationOptions& options, std::uint64_t& expansions) {
    const int n = options.order;
    std::vector<Masks> out;
    for (std::size_t idx = first; idx < level.size(); idx += stride) {
        const Masks& g = level[idx];
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (g[u] & bit(v))
                    continue;
                Masks child = g;
                child[u] |= bit(v);
                child[v] |= bit(u);
                ++expansions;
                if (!completable(child, remaining, options))
                    continue;
                out.push_back(canonical_masks(child));
            }
        }
    }
    return out;
}

void sort_unique(std::vector<Masks>& graphs) {
    std::sort(graphs.begin(), graphs.end());
    graphs.erase(std::unique(graphs.begin(), graphs.end()), graphs.end());
}

} // namespace

int mask_component_count(const Masks& adjacency) {
    const int n = static_cast<int>(adjacency.size());
    std::uint64_t unseen = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    int components = 0;
    while (unseen) {
        ++components;
        std::uint64_t frontier = unseen & (~unseen + 1);
        unseen &= ~frontier;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t rest = frontier; rest; rest &= rest - 1)
                next |= adjacency[std::countr_zero(rest)];
            frontier = next & unseen;
            unseen &= ~frontier;
        }
    }
    return components;
}

GenerationResult generate_levels(const GenerationOptions& options) {
    const int n = options.order;
    if (n < 0 || options.edges < 0)
        throw DomainError("generation needs non-negative order and edge count");
    if (n > kCanonicalLimit)
        throw CapacityError("generation supports at most " + std::to_string(kCanonicalLimit) +
                            " vertices");
    GenerationResult result;
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    Masks empty(n, 0);
    if (options.edges > pairs || !completable(empty, options.edges, options)) {
        result.levels.assign(options.edges + 1, {});
        return result;
    }
    result.levels.push_back({empty});

    const int workers = std::max(1, options.workers);
    for (int j = 1; j <= options.edges; ++j) {
        const auto& previous = result.levels.back();
        const int remaining = options.edges - j;
        std::vector<Masks> next;
        if (workers == 1 || previous.size() < 2) {
            next = expand(previous, 0, 1, remaining, options, result.expansions);
        } else {
            std::vector<std::vector<Masks>> parts(workers);
            std::vector<std::uint64_t> counts(workers, 0);
            {
                std::vector<std::jthread> pool;
                for (int w = 0; w < workers; ++w)
                    pool.emplace_back([&, w] {
                        parts[w] = expand(previous, static_cast<std::size_t>(w),
                                          static_cast<std::size_t>(workers), remaining, options,
                                          counts[w]);
                    });
            }
            for (int w = 0; w < workers; ++w) {
                result.expansions += counts[w];
                next.insert(next.end(), parts[w].begin(), parts[w].end());
            }
        }
        sort_unique(next);
        result.levels.push_back(std::move(next));
    }

    auto& last = result.levels.back();
    last.erase(std::remove_if(last.begin(), last.end(),
                              [&](const Masks& g) { return !in_target(g, options); }),
               last.end());
    return result;
}

std::vector<Masks> generate_graphs(const GenerationOptions& options) {
    return std::move(generate_levels(options).levels.back());
}

} // namespace cyclemax
