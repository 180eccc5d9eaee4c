#include "cyclemax/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclemax/errors.hpp"

namespace cyclemax {

namespace {

mpz_class to_mpz(std::uint64_t v) {
    return mpz_class(std::to_string(v));
}

mpz_class pow_ui(unsigned long base, std::uint64_t exponent) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, static_cast<unsigned long>(exponent));
    return out;
}

/// (s^(1-alpha) (s+1)^alpha)^(n-1), exactly: the exponents (1-alpha)(n-1)
/// and alpha(n-1) are the integers n-1-r and r.
mpz_class dense_growth(const BoundParams& p) {
    const std::uint64_t r = p.remainder();
    const std::uint64_t rest = static_cast<std::uint64_t>(p.n - 1) - r;
    return pow_ui(static_cast<unsigned long>(p.s), rest) * pow_ui(static_cast<unsigned long>(p.s + 1), r);
}

/// coefficient * 3^(e/3), exact when 3 divides e.
BoundValue times_cube_root_power(const mpq_class& coefficient, long e) {
    BoundValue out;
    out.value = Interval::power(mpq_class(3), e, 3) * coefficient;
    if (e % 3 == 0) {
        mpq_class exact = coefficient;
        if (e >= 0)
            exact *= mpq_class(pow_ui(3, static_cast<std::uint64_t>(e / 3)));
        else
            exact /= mpq_class(pow_ui(3, static_cast<std::uint64_t>(-e / 3)));
        out.exact = exact;
        out.value = Interval(exact);
    }
    return out;
}

BoundValue exact_value(const mpq_class& q) {
    BoundValue out;
    out.exact = q;
    out.value = Interval(q);
    return out;
}

BoundValue growth_bound(const BoundParams& p, const mpq_class& coefficient) {
    if (p.dense())
        return exact_value(coefficient * mpq_class(dense_growth(p)));
    return times_cube_root_power(coefficient, static_cast<long>(p.m));
}

void check_branches_agree(const BoundParams& p, const mpq_class& coefficient) {
    // At m/(n-1) == 3 both cases of the theorem reduce to coefficient * 3^(n-1).
    if (p.s == 3 && sgn(p.alpha) == 0) {
        auto sparse = times_cube_root_power(coefficient, static_cast<long>(p.m));
        auto dense = exact_value(coefficient * mpq_class(dense_growth(p)));
        if (!sparse.exact || *sparse.exact != *dense.exact)
            throw std::logic_error("bound branches disagree at m/(n-1) = 3");
    }
}

} // namespace

BoundParams make_bound_params(int n, std::uint64_t m, std::uint64_t max_degree) {
    if (n < 2)
        throw DomainError("bounds need n >= 2, got n = " + std::to_string(n));
    BoundParams p;
    p.n = n;
    p.m = m;
    p.max_degree = max_degree;
    const auto d = static_cast<std::uint64_t>(n - 1);
    p.s = m / d;
    p.alpha = mpq_class(to_mpz(m % d), to_mpz(d));
    p.alpha.canonicalize();
    return p;
}

std::string BoundValue::to_string(bool as_upper_bound) const {
    if (exact)
        return format_rational(*exact);
    return as_upper_bound ? value.upper_string() : value.lower_string();
}

AhrensBounds ahrens(int n, std::uint64_t m, int components) {
    if (components < 1 || n < components)
        throw DomainError("Ahrens bounds need 1 <= k <= n");
    const mpz_class r = to_mpz(m) - n + components;
    AhrensBounds out{0, 0};
    if (r > 0) {
        out.lower = r;
        mpz_ui_pow_ui(out.upper.get_mpz_t(), 2, r.get_ui());
        out.upper -= 1;
    }
    return out;
}

mpq_class aldred_thomassen(int n, std::uint64_t m) {
    const mpz_class e = to_mpz(m) - n + 1;
    mpq_class out(15, 16);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, mpz_class(abs(e)).get_ui());
    if (e >= 0)
        out *= mpq_class(power);
    else
        out /= mpq_class(power);
    out.canonicalize();
    return out;
}

BoundValue new_bound(const BoundParams& p) {
    const mpq_class coefficient = mpq_class(3, 4) * mpq_class(to_mpz(p.max_degree));
    check_branches_agree(p, coefficient);
    return growth_bound(p, coefficient);
}

BoundValue vertex_cycle_bound(const BoundParams& p) {
    if (p.n < 3)
        throw DomainError("the per-vertex bound needs n >= 3");
    const mpq_class coefficient = mpq_class(to_mpz(p.max_degree)) / 2;
    check_branches_agree(p, coefficient);
    return growth_bound(p, coefficient);
}

CorollaryReport corollary_bound(std::uint64_t m) {
    CorollaryReport out;
    out.bound = times_cube_root_power(mpq_class(33, 4), static_cast<long>(m));
    mpq_class power;
    mpz_class num = pow_ui(1443, m), den = pow_ui(1000, m);
    power = mpq_class(num, den);
    power.canonicalize();
    out.power_1443 = exact_value(power);

    if (out.bound.value.certainly_below(out.power_1443.value))
        out.implies_1443 = true;
    else if (out.power_1443.value.certainly_below(out.bound.value))
        out.implies_1443 = false;
    else
        throw std::runtime_error("precision too low to order 8.25*3^(m/3) and 1.443^m");

    // Cross-check by exact integers: (33/4)^3 3^m < (1443/1000)^(3m).
    const mpz_class lhs = pow_ui(33, 3) * pow_ui(3, m) * pow_ui(1000, 3 * m);
    const mpz_class rhs = pow_ui(4, 3) * pow_ui(1443, 3 * m);
    if ((lhs < rhs) != out.implies_1443)
        throw std::logic_error("directed-rounding and exact comparisons disagree");
    return out;
}

ProductPartition max_product_partition(int m, int parts_max) {
    if (m < 0)
        throw DomainError("max_product_partition needs m >= 0");
    if (parts_max < 1)
        throw DomainError("max_product_partition needs parts_max >= 1");
    ProductPartition best{1, {}};
    if (m == 0)
        return best;

    const int t_max = std::min(parts_max, m);
    // exact[t][j]: largest product of exactly t parts summing to exactly j.
    std::vector<std::vector<Count>> exact(t_max + 1, std::vector<Count>(m + 1, 0));
    std::vector<std::vector<int>> last(t_max + 1, std::vector<int>(m + 1, 0));
    exact[0][0] = 1;
    best.product = 0;
    int best_t = 0, best_j = 0;
    for (int t = 1; t <= t_max; ++t) {
        for (int j = t; j <= m; ++j) {
            for (int x = 1; x <= j - (t - 1); ++x) {
                if (exact[t - 1][j - x] == 0)
                    continue;
                Count candidate = exact[t - 1][j - x] * x;
                if (candidate > exact[t][j]) {
                    exact[t][j] = candidate;
                    last[t][j] = x;
                }
            }
            if (exact[t][j] > best.product) {
                best.product = exact[t][j];
                best_t = t;
                best_j = j;
            }
        }
    }
    for (int t = best_t, j = best_j; t > 0; --t) {
        best.parts.push_back(last[t][j]);
        j -= last[t][j];
    }
    std::sort(best.parts.rbegin(), best.parts.rend());
    return best;
}

MultigraphBounds multigraph_bounds(int n, std::uint64_t m, std::uint64_t max_degree) {
    if (m < 3)
        throw DomainError("multigraph bounds need m >= 3");
    const BoundParams p = make_bound_params(n, m, max_degree);
    const mpq_class upper_coefficient = mpq_class(3, 4) * mpq_class(to_mpz(max_degree));
    const auto three_n = 3 * static_cast<std::uint64_t>(n - 1);

    MultigraphBounds out;
    if (m >= three_n) {
        const mpq_class growth(dense_growth(p));
        out.dense = MultigraphBounds::Branch{
            exact_value(mpq_class(8, 27) * mpq_class(to_mpz(p.s)) * growth),
            exact_value(upper_coefficient * growth)};
    }
    if (m <= three_n) {
        out.sparse = MultigraphBounds::Branch{
            times_cube_root_power(mpq_class(4), static_cast<long>(m) - 4),
            times_cube_root_power(upper_coefficient, static_cast<long>(m))};
    }
    return out;
}

MultigraphBounds::Branch multigraph_edge_bounds(std::uint64_t m) {
    if (m < 3)
        throw DomainError("multigraph bounds need m >= 3");
    return {times_cube_root_power(mpq_class(4), static_cast<long>(m) - 4),
            times_cube_root_power(mpq_class(33, 4), static_cast<long>(m))};
}

BoundReport bound_report(const SimpleGraph& g) {
    BoundReport r;
    r.n = g.order();
    r.m = static_cast<std::uint64_t>(g.size());
    r.components = g.component_count();
    r.max_degree = g.order() > 0 ? degree_stats(g).max_degree : 0;
    if (r.n >= 1)
        r.ahrens = ahrens(r.n, r.m, r.components);
    if (r.n >= 1 && r.components == 1)
        r.aldred_thomassen = aldred_thomassen(r.n, r.m);
    if (r.n >= 2)
        r.new_bound = new_bound(make_bound_params(r.n, r.m, r.max_degree));
    r.corollary = corollary_bound(r.m);
    return r;
}

BoundReport bound_report(const Multigraph& g) {
    BoundReport r;
    r.n = g.order();
    r.m = g.size();
    r.components = g.underlying().component_count();
    r.max_degree = g.order() > 0 ? degree_stats(g).max_degree : 0;
    if (r.n >= 2)
        r.new_bound = new_bound(make_bound_params(r.n, r.m, r.max_degree));
    r.corollary = corollary_bound(r.m);
    return r;
}

} // namespace cyclemax
