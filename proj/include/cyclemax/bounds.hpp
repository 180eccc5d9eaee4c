#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyclemax/counting.hpp"
#include "cyclemax/graph.hpp"
#include "cyclemax/interval.hpp"

namespace cyclemax {

/// n, m, the maximum degree, and m/(n-1) split as s + alpha with s integral.
struct BoundParams {
    int n = 2;
    std::uint64_t m = 0;
    std::uint64_t max_degree = 0;
    std::uint64_t s = 0;
    mpq_class alpha;

    /// m mod (n-1), i.e. alpha * (n-1).
    std::uint64_t remainder() const { return m - s * static_cast<std::uint64_t>(n - 1); }
    /// m/(n-1) >= 3, decided exactly.
    bool dense() const { return s >= 3; }
};

/// Throws DomainError when n < 2.
BoundParams make_bound_params(int n, std::uint64_t m, std::uint64_t max_degree);

/// A bound as an exact rational when it is one, plus a directed-rounding
/// enclosure that is always present.
struct BoundValue {
    Interval value;
    std::optional<mpq_class> exact;

    /// Sound check that a count does not exceed this upper bound.
    bool admits_at_most(const Count& c) const { return value.certainly_at_least(c); }
    /// Sound check that a count is not below this lower bound.
    bool admits_at_least(const Count& c) const { return value.certainly_at_most(c); }
    /// Sound check that a count is strictly below this bound.
    bool strictly_above(const Count& c) const { return value.certainly_greater(c); }

    /// Exact decimal when available; otherwise the enclosure end rounded
    /// away from the guaranteed side (up for upper bounds).
    std::string to_string(bool as_upper_bound = true) const;
};

struct AhrensBounds {
    Count lower;
    Count upper;
};

/// (max(r, 0), 2^r - 1) with r = m - n + k, the upper end clamped to 0
/// when r <= 0. Requires 1 <= k <= n.
AhrensBounds ahrens(int n, std::uint64_t m, int components);

/// (15/16) 2^(m-n+1); valid for connected graphs.
mpq_class aldred_thomassen(int n, std::uint64_t m);

/// (3/4) Delta 3^(m/3) when m/(n-1) < 3, otherwise
/// (3/4) Delta (s^(1-alpha) (s+1)^alpha)^(n-1) = (3/4) Delta s^(n-1-r) (s+1)^r.
BoundValue new_bound(const BoundParams& p);

/// (Delta/2) times the same growth term; the per-vertex bound. n >= 3.
BoundValue vertex_cycle_bound(const BoundParams& p);

struct CorollaryReport {
    BoundValue bound;         // 8.25 * 3^(m/3)
    BoundValue power_1443;    // 1.443^m
    /// 8.25 * 3^(m/3) < 1.443^m, i.e. the corollary implies C(m) < 1.443^m.
    bool implies_1443 = false;
};

CorollaryReport corollary_bound(std::uint64_t m);

/// Largest product of at most `parts_max` positive integers with sum <= m.
/// For m == 0 the empty product 1 is returned with no parts.
struct ProductPartition {
    Count product;
    std::vector<int> parts;  // non-increasing
};

ProductPartition max_product_partition(int m, int parts_max);

/// Bounds on the maximum cycle count over multigraphs with n vertices and
/// m >= 3 edges. At m/(n-1) == 3 both branches are present.
struct MultigraphBounds {
    struct Branch {
        BoundValue lower;
        BoundValue upper;
    };
    std::optional<Branch> dense;   // m/(n-1) >= 3
    std::optional<Branch> sparse;  // m/(n-1) <= 3
};

MultigraphBounds multigraph_bounds(int n, std::uint64_t m, std::uint64_t max_degree);

/// 4 * 3^((m-4)/3) <= C <= 8.25 * 3^(m/3) for the best multigraph with m >= 3 edges.
MultigraphBounds::Branch multigraph_edge_bounds(std::uint64_t m);

/// Every bound that applies to one input graph.
struct BoundReport {
    int n = 0;
    std::uint64_t m = 0;
    int components = 0;
    std::uint64_t max_degree = 0;
    std::optional<AhrensBounds> ahrens;          // simple graphs
    std::optional<mpq_class> aldred_thomassen;   // connected simple graphs
    std::optional<BoundValue> new_bound;         // n >= 2
    CorollaryReport corollary;
};

BoundReport bound_report(const SimpleGraph& g);
BoundReport bound_report(const Multigraph& g);

} // namespace cyclemax
