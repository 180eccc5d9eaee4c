#pragma once

#include <cstdint>
#include <vector>

#include "cyclemax/counting.hpp"
#include "cyclemax/graph.hpp"

namespace cyclemax {

/// Ladder with crossed rungs on 2n+2 vertices and 5n+1 edges.
///
/// Vertex u_i is labeled i-1 and v_i is labeled n+i (1 <= i <= n+1). Edges:
/// u_i v_j for |i-j| <= 1, and the two rails u_i u_{i+1}, v_i v_{i+1}.
/// Throws DomainError for n < 1.
SimpleGraph construct_hn(int n);

/// Label of u_i / v_i in construct_hn(n).
constexpr Vertex ladder_u(int /*n*/, int i) { return i - 1; }
constexpr Vertex ladder_v(int n, int i) { return n + i; }

/// Paths from u_1 to u_{n+1} in H_n. Enumerated for n <= kPathEnumerationLimit,
/// continued by P(n) = 4P(n-1) + 4P(n-2) above it.
inline constexpr int kPathEnumerationLimit = 8;
Count path_count_P(int n);
/// The enumerated value, for any n the caller is willing to wait for.
Count path_count_P_enumerated(int n);
/// P(n) from the recurrence seeded with enumerated P(1) and P(2).
Count path_count_P_recurrence(int n);

/// ceil((2+2 sqrt 2)^n) for n >= 0, exactly: with (2+2 sqrt 2)^n = a + b sqrt 2
/// and b > 0 the ceiling is a + floor(sqrt(2 b^2)) + 1.
Count ladder_growth_ceiling(int n);

/// H_n with its end vertices u_1 and u_{n+1} identified: 2n+1 vertices,
/// 5n+1 edges. u_{n+1} is removed and higher labels shift down by one.
/// Throws DomainError for n < 3 (smaller n would need parallel edges).
SimpleGraph construct_gn(int n);

/// G_{floor((m-1)/5)} plus a pendant path from vertex 0 carrying the
/// remaining m - 5 floor((m-1)/5) - 1 edges. Throws DomainError for m < 16.
SimpleGraph construct_lower_bound_graph(int m);

/// Cycle 0-1-...-(n-1)-0 whose pairs carry floor(m/n) or floor(m/n)+1
/// parallel edges; the first m mod n pairs (0,1), (1,2), ... get the larger
/// value. For n = 2 both cycle edges join 0 and 1, giving m parallel edges.
struct MultiCycleSpec {
    int n = 2;
    std::uint64_t m = 2;
};

/// Multiplicity of cycle edge (i, i+1 mod n).
std::vector<std::uint32_t> cnm_multiplicities(const MultiCycleSpec& spec);

/// Throws DomainError unless n >= 2 and m >= n.
Multigraph construct_cnm(const MultiCycleSpec& spec);

/// Closed form: prod(mult_i) + sum C(mult_i, 2) for n >= 3, C(m, 2) for n = 2.
Count cnm_cycle_count(const MultiCycleSpec& spec);

} // namespace cyclemax
