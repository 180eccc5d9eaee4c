#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclemax/counting.hpp"
#include "cyclemax/graph.hpp"

namespace cyclemax {

inline constexpr int kSearchMinEdges = 3;
inline constexpr int kSearchMaxEdges = 14;
inline constexpr int kExhaustiveMaxEdges = 8;
inline constexpr int kCorpusMaxOrder = 8;

struct SearchOptions {
    bool prune_max_degree = true;  // Delta <= 11
    bool prune_min_degree = true;  // delta >= 3, only when m > 7
    int workers = 1;
};

struct SearchStats {
    std::uint64_t generated = 0;   // canonical graphs kept over all levels
    std::uint64_t expansions = 0;  // edge additions examined
    std::uint64_t counted = 0;     // complete graphs whose cycles were counted
};

/// C(m) with every connected graph attaining it, up to isomorphism.
struct ExtremalResult {
    int m = 0;
    Count cmax;
    /// Canonical graphs, sorted by graph6 string.
    std::vector<SimpleGraph> witnesses;
    std::vector<std::string> witness_graph6;
    int n_min = 0;
    int n_max = 0;
    int min_degree_used = 2;
    bool max_degree_pruned = false;
    /// Witnesses with a vertex of degree one, derived from C(m-1) = C(m).
    std::size_t pendant_witnesses = 0;
    SearchStats stats;
};

/// Searches connected graphs with minimum degree >= 2 on 3..m vertices, then
/// adds the connected witnesses with a leaf: when C(m-1) == C(m) these are
/// the witnesses for m-1 with one pendant edge attached. With the
/// minimum-degree prune active and m > 7 the core search needs delta >= 3
/// and no leaf witnesses are sought.
/// Throws CapacityError outside kSearchMinEdges..kSearchMaxEdges.
ExtremalResult extremal_search(int m, const SearchOptions& options = {});

/// Unrestricted check: every graph with m edges and no isolated vertex.
/// Witnesses include disconnected graphs. Throws CapacityError for m < 1 or
/// m > kExhaustiveMaxEdges.
ExtremalResult exhaustive_search(int m, int workers = 1);

struct BoundCheck {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    /// Largest C(G)/bound for upper bounds, smallest for lower bounds;
    /// graphs where the ratio is undefined (bound zero) are skipped.
    double extreme_ratio = 0.0;
    /// Graphs meeting the bound with equality, as canonical graph6.
    std::vector<std::string> tight;
};

struct CorpusReport {
    int nmax = 0;
    std::uint64_t graphs = 0;
    BoundCheck ahrens_lower;
    BoundCheck ahrens_upper;
    BoundCheck aldred_thomassen;
    BoundCheck new_bound;
    std::vector<std::string> violations;  // "bound: graph6", first few

    bool clean() const {
        return ahrens_lower.violations + ahrens_upper.violations + aldred_thomassen.violations +
                   new_bound.violations == 0;
    }
};

/// Checks the Ahrens bounds, the Aldred-Thomassen bound and the
/// (Delta, n, m) bound on every connected graph with 1..nmax vertices.
/// Throws CapacityError for nmax > kCorpusMaxOrder.
CorpusReport verify_bounds_on_corpus(int nmax, int workers = 1);

} // namespace cyclemax
