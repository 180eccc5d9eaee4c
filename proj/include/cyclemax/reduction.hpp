#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cyclemax/counting.hpp"
#include "cyclemax/graph.hpp"

namespace cyclemax {

struct SelectionOptions {
    std::uint64_t seed = 0;
    /// Candidate count up to which selection is exhaustive.
    std::uint64_t exhaustive_limit = 1'000'000;
    /// Count cycles before and after each surgery and insist on an increase.
    bool verify_counts = true;
};

/// Six indices whose removal keeps `retained` of the total weight S.
struct DeletionChoice {
    std::array<int, 6> deleted{};  // increasing
    Count retained;
    mpq_class guarantee;           // (1 - 6(2k-7)/(k(k-1))) S
    bool exhaustive = false;

    bool certified() const { return mpq_class(retained) >= guarantee; }
};

/// Ordered split of [k] into parts of sizes floor((k+l-1)/4), l = 1..4.
struct Quadripartition {
    std::array<std::vector<int>, 4> parts;  // each increasing
    Count cross;
    mpq_class guarantee;                    // (3k^2-4)/(4k(k-1)) S
    bool exhaustive = false;

    bool certified() const { return mpq_class(cross) >= guarantee; }
};

/// Part sizes floor((k+l-1)/4) for l = 1..4; they sum to k.
std::array<int, 4> quadripartition_sizes(int k);

/// Maximizes the retained weight exhaustively when C(k,6) is within the
/// limit, otherwise by seeded swap local search. The result always meets
/// the guarantee. Throws DomainError for k < 6.
DeletionChoice select_deletion_set(const PairWeights& w, const SelectionOptions& options = {});

/// Maximizes the cross weight exhaustively when the number of
/// size-respecting partitions is within the limit, otherwise by seeded
/// random restarts with swap descent. Throws DomainError for k < 2.
Quadripartition select_quadripartition(const PairWeights& w, const SelectionOptions& options = {});

/// Retained weight of a given deletion set, S - sum w_i + sum_{i<j in D} w_ij.
Count retained_weight(const PairWeights& w, const std::array<int, 6>& deleted);
/// Weight on pairs split across different parts.
Count cross_weight(const PairWeights& w, const std::array<std::vector<int>, 4>& parts);

/// One application of the degree-reducing surgery.
///
/// u is the smallest-index vertex of maximum degree and k = deg(u).
/// Vertex labels in `result`: g - u with labels above u shifted down by
/// one, then v_1..v_4 at n-1..n+2.
struct ReductionStep {
    Vertex u = 0;
    int k = 0;
    PairWeights weights;                           // over N(u), in g's labels
    DeletionChoice deletion;                       // indices into weights
    Quadripartition partition;                     // indices into the retained neighbours
    std::vector<Vertex> deleted_vertices;          // labels in g
    std::array<std::vector<Vertex>, 4> part_vertices;  // labels in g
    std::optional<Count> cycles_before;  // present when verify_counts is set
    std::optional<Count> cycles_after;
    SimpleGraph result{0};
};

/// Throws PreconditionError when Delta(g) < 12. Throws std::logic_error if
/// the surgery changes m or, when verified, fails to increase the count.
ReductionStep reduce_max_degree_step(const SimpleGraph& g, const SelectionOptions& options = {},
                                     const CountOptions& counting = {});
SimpleGraph reduce_max_degree(const SimpleGraph& g, const SelectionOptions& options = {});

struct ReductionTrace {
    SimpleGraph result{0};
    std::vector<ReductionStep> steps;
    /// False when the step cap (m steps) was reached with Delta still >= 12.
    bool completed = true;
};

/// Applies reduce_max_degree until Delta <= 11, at most m times.
ReductionTrace reduce_to_bounded_degree(const SimpleGraph& g, const SelectionOptions& options = {},
                                        const CountOptions& counting = {});

} // namespace cyclemax
