#include "cyclemax/constructions.hpp"

#include <limits>
#include <string>

#include "cyclemax/errors.hpp"

namespace cyclemax {

SimpleGraph construct_hn(int n) {
    if (n < 1)
        throw DomainError("H_n needs n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 1; i <= n + 1; ++i) {
        for (int j = std::max(1, i - 1); j <= std::min(n + 1, i + 1); ++j)
            edges.push_back({ladder_u(n, i), ladder_v(n, j)});
    }
    for (int i = 1; i <= n; ++i) {
        edges.push_back({ladder_u(n, i), ladder_u(n, i + 1)});
        edges.push_back({ladder_v(n, i), ladder_v(n, i + 1)});
    }
    return SimpleGraph(2 * n + 2, edges);
}

Count path_count_P_enumerated(int n) {
    const SimpleGraph h = construct_hn(n);
    return count_paths(h, ladder_u(n, 1), ladder_u(n, n + 1));
}

Count path_count_P_recurrence(int n) {
    if (n < 1)
        throw DomainError("P(n) needs n >= 1");
    Count older = path_count_P_enumerated(1);
    if (n == 1)
        return older;
    Count newer = path_count_P_enumerated(2);
    for (int i = 3; i <= n; ++i) {
        Count next = 4 * newer + 4 * older;
        older = newer;
        newer = next;
    }
    return newer;
}

Count path_count_P(int n) {
    if (n < 1)
        throw DomainError("P(n) needs n >= 1");
    if (n <= kPathEnumerationLimit)
        return path_count_P_enumerated(n);
    return path_count_P_recurrence(n);
}

Count ladder_growth_ceiling(int n) {
    if (n < 0)
        throw DomainError("growth exponent must be non-negative");
    Count a = 1, b = 0;
    for (int i = 0; i < n; ++i) {
        Count next_a = 2 * a + 4 * b;
        b = 2 * a + 2 * b;
        a = next_a;
    }
    if (b == 0)
        return a;
    Count root;
    mpz_sqrt(root.get_mpz_t(), Count(2 * b * b).get_mpz_t());
    return a + root + 1;
}

SimpleGraph construct_gn(int n) {
    if (n < 3)
        throw DomainError("G_n needs n >= 3, got " + std::to_string(n));
    const SimpleGraph h = construct_hn(n);
    const Vertex keep = ladder_u(n, 1);
    const Vertex merged = ladder_u(n, n + 1);
    auto relabel = [&](Vertex x) {
        if (x == merged)
            return keep;
        return x > merged ? x - 1 : x;
    };
    std::vector<Edge> edges;
    for (const Edge& e : h.edges())
        edges.push_back({relabel(e.u), relabel(e.v)});
    SimpleGraph g(2 * n + 1, edges);
    if (g.size() != h.size())
        throw std::logic_error("identifying the ladder ends created parallel edges");
    return g;
}

SimpleGraph construct_lower_bound_graph(int m) {
    if (m < 16)
        throw DomainError("the lower-bound graph needs m >= 16, got " + std::to_string(m));
    const int k = (m - 1) / 5;
    const SimpleGraph base = construct_gn(k);
    const int leftover = m - 5 * k - 1;
    std::vector<Edge> tail;
    Vertex previous = 0;
    for (int i = 0; i < leftover; ++i) {
        const Vertex fresh = base.order() + i;
        tail.push_back({previous, fresh});
        previous = fresh;
    }
    return base.extended(leftover, tail);
}

namespace {

void check_spec(const MultiCycleSpec& spec) {
    if (spec.n < 2)
        throw DomainError("C_{n,m} needs n >= 2");
    if (spec.m < static_cast<std::uint64_t>(spec.n))
        throw DomainError("C_{n,m} needs m >= n");
    if (spec.m / static_cast<std::uint64_t>(spec.n) + 1 > std::numeric_limits<std::uint32_t>::max())
        throw DomainError("C_{n,m} multiplicity too large");
}

} // namespace

std::vector<std::uint32_t> cnm_multiplicities(const MultiCycleSpec& spec) {
    check_spec(spec);
    const auto n = static_cast<std::uint64_t>(spec.n);
    const std::uint64_t base = spec.m / n;
    const std::uint64_t heavier = spec.m - base * n;
    std::vector<std::uint32_t> mult(spec.n);
    for (std::uint64_t i = 0; i < n; ++i)
        mult[i] = static_cast<std::uint32_t>(i < heavier ? base + 1 : base);
    return mult;
}

Multigraph construct_cnm(const MultiCycleSpec& spec) {
    const auto mult = cnm_multiplicities(spec);
    std::vector<Multigraph::Bundle> bundles;
    for (int i = 0; i < spec.n; ++i)
        bundles.push_back({{i, (i + 1) % spec.n}, mult[i]});
    // For n = 2 the two bundles join the same pair and accumulate.
    return Multigraph(spec.n, bundles);
}

Count cnm_cycle_count(const MultiCycleSpec& spec) {
    const auto mult = cnm_multiplicities(spec);
    auto choose2 = [](const Count& k) { return Count(k * (k - 1) / 2); };
    if (spec.n == 2)
        return choose2(Count(std::to_string(spec.m)));
    Count product = 1;
    Count pairs = 0;
    for (auto k : mult) {
        product *= k;
        pairs += choose2(Count(k));
    }
    return product + pairs;
}

} // namespace cyclemax
