#include <cmath>

#include <gtest/gtest.h>

#include "cyclemax/bounds.hpp"
#include "cyclemax/errors.hpp"
#include "cyclemax/generation.hpp"
#include "support.hpp"

using namespace cyclemax;

namespace {

SimpleGraph complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return SimpleGraph(n, edges);
}

mpz_class power(unsigned long base, unsigned long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

std::uint64_t max_degree(const SimpleGraph& g) {
    return degree_stats(g).max_degree;
}

} // namespace

TEST(Ahrens, Examples) {
    const auto k4 = ahrens(4, 6, 1);
    EXPECT_EQ(k4.lower, 3);
    EXPECT_EQ(k4.upper, 7);
    const auto tree = ahrens(7, 6, 1);
    EXPECT_EQ(tree.lower, 0);
    EXPECT_EQ(tree.upper, 0);
    const auto k33 = ahrens(6, 9, 1);
    EXPECT_EQ(k33.lower, 4);
    EXPECT_EQ(k33.upper, 15);
    const auto forest = ahrens(5, 2, 3);
    EXPECT_EQ(forest.lower, 0);
    EXPECT_EQ(forest.upper, 0);
}

TEST(Ahrens, RejectsBadComponentCount) {
    EXPECT_THROW(ahrens(3, 3, 0), DomainError);
    EXPECT_THROW(ahrens(3, 0, 4), DomainError);
}

TEST(AldredThomassen, Examples) {
    EXPECT_EQ(aldred_thomassen(4, 6), mpq_class(15, 2));
    EXPECT_EQ(aldred_thomassen(5, 5), mpq_class(15, 8));
    EXPECT_EQ(aldred_thomassen(6, 9), 15);
    EXPECT_EQ(format_rational(aldred_thomassen(4, 6)), "7.5");
}

TEST(BoundParams, SplitsRatioExactly) {
    const BoundParams p = make_bound_params(4, 14, 5);
    EXPECT_EQ(p.s, 4u);
    EXPECT_EQ(p.alpha, mpq_class(2, 3));
    EXPECT_EQ(mpq_class(p.s) + p.alpha, mpq_class(14, 3));
    EXPECT_EQ(p.remainder(), 2u);
    EXPECT_TRUE(p.dense());
    EXPECT_THROW(make_bound_params(1, 0, 0), DomainError);
}

TEST(NewBound, Examples) {
    const BoundValue k4 = new_bound(make_bound_params(4, 6, 3));
    ASSERT_TRUE(k4.exact);
    EXPECT_EQ(*k4.exact, mpq_class(81, 4));
    EXPECT_EQ(k4.to_string(), "20.25");
    EXPECT_TRUE(k4.strictly_above(7));

    const BoundValue pair = new_bound(make_bound_params(2, 5, 5));
    ASSERT_TRUE(pair.exact);
    EXPECT_EQ(*pair.exact, mpq_class(75, 4));
    EXPECT_TRUE(pair.strictly_above(10));

    for (std::uint64_t delta : {0u, 1u, 4u, 8u}) {
        const BoundValue b = new_bound(make_bound_params(3, 8, delta));
        ASSERT_TRUE(b.exact);
        EXPECT_EQ(*b.exact, mpq_class(3, 4) * delta * 16);
    }
}

TEST(NewBound, IrrationalSparseBranchIsEnclosed) {
    // m = 7, n = 8: (3/4) * 2 * 3^(7/3)
    const BoundValue b = new_bound(make_bound_params(8, 7, 2));
    EXPECT_FALSE(b.exact);
    const double expected = 1.5 * std::pow(3.0, 7.0 / 3.0);
    EXPECT_NEAR(mpfr_get_d(b.value.lower(), MPFR_RNDN), expected, 1e-12);
    EXPECT_LE(mpfr_cmp(b.value.lower(), b.value.upper()), 0);
    mpfr_t width;
    mpfr_init2(width, 256);
    mpfr_sub(width, b.value.upper(), b.value.lower(), MPFR_RNDU);
    EXPECT_LT(mpfr_get_d(width, MPFR_RNDU), 1e-60);
    mpfr_clear(width);
}

TEST(NewBound, DenseBranchUsesExactGrowth) {
    // n = 4, m = 14: s = 4, r = 2, growth 4^1 * 5^2 = 100.
    const BoundValue b = new_bound(make_bound_params(4, 14, 6));
    ASSERT_TRUE(b.exact);
    EXPECT_EQ(*b.exact, mpq_class(3, 4) * 6 * 100);
}

TEST(NewBound, BranchesMeetAtRatioThree) {
    for (int n = 2; n <= 12; ++n) {
        const std::uint64_t m = 3 * static_cast<std::uint64_t>(n - 1);
        const BoundValue b = new_bound(make_bound_params(n, m, 7));
        ASSERT_TRUE(b.exact);
        EXPECT_EQ(*b.exact, mpq_class(3, 4) * 7 * mpq_class(power(3, n - 1)));
    }
}

TEST(NewBound, HoldsStrictlyForRandomMultigraphs) {
    gen::Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const Multigraph g = gen::random_multigraph(rng, 7, 12);
        const Count c(static_cast<unsigned long>(oracle::cycles(g)));
        const BoundValue b = new_bound(make_bound_params(g.order(), g.size(), degree_stats(g).max_degree));
        EXPECT_TRUE(b.strictly_above(c)) << to_multigraph_text(g);
    }
}

TEST(Corollary, Examples) {
    const auto six = corollary_bound(6);
    ASSERT_TRUE(six.bound.exact);
    EXPECT_EQ(six.bound.to_string(), "74.25");
    EXPECT_EQ(corollary_bound(0).bound.to_string(), "8.25");
    EXPECT_FALSE(corollary_bound(100).implies_1443);
}

TEST(Corollary, CrossoverBetween4056And4057) {
    EXPECT_FALSE(corollary_bound(4055).implies_1443);
    EXPECT_FALSE(corollary_bound(4056).implies_1443);
    EXPECT_TRUE(corollary_bound(4057).implies_1443);
    EXPECT_TRUE(corollary_bound(4058).implies_1443);
}

TEST(VertexBound, Examples) {
    const BoundValue k4 = vertex_cycle_bound(make_bound_params(4, 6, 3));
    ASSERT_TRUE(k4.exact);
    EXPECT_EQ(*k4.exact, mpq_class(27, 2));
    EXPECT_TRUE(k4.admits_at_most(cycles_through_vertex(complete(4), 0)));

    // Wheel: hub 0 on the rim 1..6.
    std::vector<Edge> edges;
    for (int i = 1; i <= 6; ++i) {
        edges.push_back({0, i});
        edges.push_back({i, i % 6 + 1});
    }
    const SimpleGraph wheel(7, edges);
    const Count hub = cycles_through_vertex(wheel, 0);
    EXPECT_EQ(hub, 30);
    const BoundValue b = vertex_cycle_bound(make_bound_params(7, 12, 6));
    ASSERT_TRUE(b.exact);
    EXPECT_EQ(*b.exact, 243);
    EXPECT_TRUE(b.admits_at_most(hub));

    const BoundValue zero = vertex_cycle_bound(make_bound_params(5, 0, 0));
    EXPECT_EQ(zero.to_string(), "0");
    EXPECT_THROW(vertex_cycle_bound(make_bound_params(2, 1, 1)), DomainError);
}

TEST(VertexBound, AtMaximumDegreeVertexOfEverySmallGraph) {
    for (int n = 3; n <= 7; ++n) {
        GenerationOptions options;
        options.order = n;
        options.edges = n * (n - 1) / 2;
        for (const auto& level : generate_levels(options).levels) {
            for (const Masks& masks : level) {
                const SimpleGraph g = SimpleGraph::from_masks(masks);
                Vertex hub = 0;
                for (Vertex v = 1; v < n; ++v)
                    if (g.degree(v) > g.degree(hub))
                        hub = v;
                const BoundValue b = vertex_cycle_bound(
                    make_bound_params(n, static_cast<std::uint64_t>(g.size()), max_degree(g)));
                ASSERT_TRUE(b.admits_at_most(cycles_through_vertex(g, hub))) << to_graph6(g);
            }
        }
    }
}

TEST(GrowthTerm, NonDecreasingOnSixteenthsGrid) {
    // f(x)^16 = s^(16-p) (s+1)^p for x = s + p/16.
    mpz_class previous = 0;
    for (int step = 16; step <= 160; ++step) {
        const unsigned long s = static_cast<unsigned long>(step / 16);
        const unsigned long p = static_cast<unsigned long>(step % 16);
        const mpz_class value = power(s, 16 - p) * power(s + 1, p);
        EXPECT_GE(value, previous) << step;
        previous = value;
    }
}

TEST(MaxProductPartition, Examples) {
    auto six = max_product_partition(6, 2);
    EXPECT_EQ(six.product, 9);
    EXPECT_EQ(six.parts, (std::vector<int>{3, 3}));

    auto seven = max_product_partition(7, 3);
    EXPECT_EQ(seven.product, 12);
    EXPECT_TRUE(seven.parts == (std::vector<int>{4, 3}) || seven.parts == (std::vector<int>{3, 2, 2}));

    auto eleven_three = max_product_partition(11, 3);
    EXPECT_EQ(eleven_three.product, 48);
    EXPECT_EQ(eleven_three.parts, (std::vector<int>{4, 4, 3}));
    auto eleven_four = max_product_partition(11, 4);
    EXPECT_EQ(eleven_four.product, 54);
    EXPECT_EQ(eleven_four.parts, (std::vector<int>{3, 3, 3, 2}));

    auto zero = max_product_partition(0, 5);
    EXPECT_EQ(zero.product, 1);
    EXPECT_TRUE(zero.parts.empty());
    EXPECT_THROW(max_product_partition(-1, 2), DomainError);
    EXPECT_THROW(max_product_partition(4, 0), DomainError);
}

TEST(MaxProductPartition, AgainstEnumeration) {
    for (int m = 0; m <= 24; ++m) {
        for (int parts = 1; parts <= 9; ++parts) {
            const auto got = max_product_partition(m, parts);
            EXPECT_EQ(got.product, oracle::best_partition_product(m, parts)) << m << " " << parts;
            mpz_class product = 1;
            int sum = 0;
            for (int x : got.parts) {
                product *= x;
                sum += x;
            }
            EXPECT_EQ(product, got.product);
            EXPECT_LE(sum, m);
            EXPECT_LE(static_cast<int>(got.parts.size()), parts);
            EXPECT_TRUE(std::is_sorted(got.parts.rbegin(), got.parts.rend()));
        }
    }
}

TEST(MaxProductPartition, NeverAboveCubeRootPower) {
    for (int m = 0; m <= 60; ++m) {
        const auto got = max_product_partition(m, m + 1);
        const mpz_class cubed = got.product * got.product * got.product;
        EXPECT_LE(cubed, power(3, static_cast<unsigned long>(m))) << m;
        if (m % 3 == 0)
            EXPECT_EQ(got.product, power(3, static_cast<unsigned long>(m / 3))) << m;
    }
}

TEST(MultigraphBounds, Examples) {
    const auto b = multigraph_bounds(5, 12, 4);
    ASSERT_TRUE(b.dense);
    ASSERT_TRUE(b.sparse);
    EXPECT_EQ(*b.dense->lower.exact, 72);
    EXPECT_EQ(*b.dense->upper.exact, mpq_class(3, 4) * 4 * 81);
    ASSERT_TRUE(b.sparse->upper.exact);
    EXPECT_EQ(*b.sparse->upper.exact, *b.dense->upper.exact);
    EXPECT_FALSE(b.sparse->lower.exact);  // 4 * 3^(8/3)

    const auto e = multigraph_edge_bounds(12);
    EXPECT_EQ(e.upper.to_string(), "668.25");
    EXPECT_NEAR(e.lower.value.approx(), 4 * std::pow(3.0, 8.0 / 3.0), 1e-9);
    EXPECT_THROW(multigraph_bounds(5, 2, 1), DomainError);
    EXPECT_THROW(multigraph_edge_bounds(2), DomainError);
}

TEST(MultigraphBounds, OnlyOneBranchAwayFromRatioThree) {
    const auto dense = multigraph_bounds(3, 9, 5);
    EXPECT_TRUE(dense.dense);
    EXPECT_FALSE(dense.sparse);
    const auto sparse = multigraph_bounds(6, 9, 5);
    EXPECT_FALSE(sparse.dense);
    EXPECT_TRUE(sparse.sparse);
}

TEST(MultigraphBounds, LowerBelowUpperOnGrid) {
    for (int n = 2; n <= 10; ++n) {
        for (std::uint64_t m = 3; m <= 30; ++m) {
            const std::uint64_t s = m / static_cast<std::uint64_t>(n - 1);
            for (std::uint64_t delta = std::max<std::uint64_t>(s, 2); delta <= s + 6; ++delta) {
                const auto b = multigraph_bounds(n, m, delta);
                for (const auto* branch : {b.dense ? &*b.dense : nullptr, b.sparse ? &*b.sparse : nullptr}) {
                    if (!branch)
                        continue;
                    EXPECT_TRUE(branch->lower.value.certainly_below(branch->upper.value))
                        << n << " " << m << " " << delta;
                }
            }
        }
    }
}

TEST(BoundReport, TreeAndCompleteGraph) {
    const BoundReport tree = bound_report(SimpleGraph(4, {{0, 1}, {1, 2}, {1, 3}}));
    ASSERT_TRUE(tree.ahrens);
    EXPECT_EQ(tree.ahrens->upper, 0);
    ASSERT_TRUE(tree.aldred_thomassen);

    const BoundReport k4 = bound_report(complete(4));
    EXPECT_EQ(k4.ahrens->upper, 7);
    EXPECT_EQ(*k4.aldred_thomassen, mpq_class(15, 2));
    EXPECT_EQ(k4.new_bound->to_string(), "20.25");
    EXPECT_EQ(k4.corollary.bound.to_string(), "74.25");

    const BoundReport split = bound_report(SimpleGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}));
    EXPECT_EQ(split.components, 3);
    EXPECT_FALSE(split.aldred_thomassen);

    const BoundReport multi = bound_report(parse_multigraph("MULTI 2\n0 1 5"));
    EXPECT_FALSE(multi.ahrens);
    EXPECT_EQ(multi.new_bound->to_string(), "18.75");
}
