#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "cyclemax/graph.hpp"

namespace cyclemax {

/// Exact non-negative cycle or path count.
using Count = mpz_class;

enum class CountMethod {
    automatic,  // subset DP for small dense graphs, DFS otherwise
    dfs,        // visited-bitmask depth-first enumeration
    subset_dp,  // Held-Karp style DP over vertex subsets (n <= kSubsetDpLimit)
};

/// Largest order the subset DP accepts (memory is 2^(n-1) * (n-1) words).
inline constexpr int kSubsetDpLimit = 20;

struct CountOptions {
    CountMethod method = CountMethod::automatic;
    int workers = 1;  // DFS roots are split across this many threads
};

/// Number of simple cycles. Each cycle is found once, from its smallest
/// vertex r, as a path r, a, ..., b with a < b and b adjacent to r.
Count count_cycles(const SimpleGraph& g, const CountOptions& options = {});

/// Single-threaded mask DFS, for callers that count many small graphs.
std::uint64_t count_cycles_masks(std::span<const std::uint64_t> adjacency);

/// Cycles of length >= 3 weighted by the product of their edge
/// multiplicities, plus C(mult, 2) two-cycles for every pair.
Count count_cycles_multi(const Multigraph& g, const CountOptions& options = {});

/// Simple s-t paths; in a multigraph each path counts with the product of
/// its multiplicities. Throws std::invalid_argument when s == t.
Count count_paths(const SimpleGraph& g, Vertex s, Vertex t, const CountOptions& options = {});
Count count_paths(const Multigraph& g, Vertex s, Vertex t);

/// Path counts between the neighbors of a vertex u in G - u.
///
/// Index i refers to the i-th neighbor of u in increasing vertex order;
/// vertex(i) returns its label in the original graph. The diagonal is zero.
class PairWeights {
public:
    PairWeights() = default;
    explicit PairWeights(std::vector<Vertex> vertices);

    int size() const noexcept { return static_cast<int>(vertices_.size()); }
    Vertex vertex(int i) const { return vertices_.at(i); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

    const Count& at(int i, int j) const;
    void set(int i, int j, const Count& value);

    /// S: the sum over unordered pairs.
    Count total() const;
    /// w_i: the sum of row i.
    Count incident(int i) const;
    /// Weights among the given indices only, re-indexed 0..size-1.
    PairWeights restricted(std::span<const int> indices) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Count> w_;
};

PairWeights pair_weights(const SimpleGraph& g, Vertex u, const CountOptions& options = {});

/// Number of cycles through u: the total of pair_weights(g, u).
Count cycles_through_vertex(const SimpleGraph& g, Vertex u, const CountOptions& options = {});

/// Debug listing: each cycle as a vertex sequence starting at its smallest
/// vertex. Stops after `limit` cycles; `truncated` reports whether it did.
struct CycleListing {
    std::vector<std::vector<Vertex>> cycles;
    bool truncated = false;
};
CycleListing list_cycles(const SimpleGraph& g, std::size_t limit = 1'000'000);

} // namespace cyclemax
