#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "frechet/law/transport.hpp"
#include "frechet/oracle/exact_ot.hpp"
#include "support/generators.hpp"

using namespace frechet;
using frechet::testing::Rng;

namespace {

// Independent recursive enumeration of all permutations.
double recursive_min(const CostMatrix& c) {
    const std::size_t n = c.size();
    std::vector<bool> used(n, false);
    double best = std::numeric_limits<double>::infinity();
    std::function<void(std::size_t, double)> go = [&](std::size_t row, double acc) {
        if (row == n) {
            best = std::min(best, acc);
            return;
        }
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j]) {
                used[j] = true;
                go(row + 1, acc + c[row][j]);
                used[j] = false;
            }
    };
    go(0, 0.0);
    return best / static_cast<double>(n);
}

}  // namespace

TEST(Assignment, Examples) {
    auto one = assignment_bruteforce({{3.5}});
    EXPECT_EQ(one.cost, 3.5);
    EXPECT_EQ(one.permutation, std::vector<std::size_t>{0});
    auto swap = assignment_bruteforce({{0, 1}, {1, 0}});
    EXPECT_EQ(swap.cost, 0.0);
    EXPECT_EQ(swap.permutation, (std::vector<std::size_t>{0, 1}));
    auto cross = assignment_bruteforce({{1, 0}, {0, 1}});
    EXPECT_EQ(cross.permutation, (std::vector<std::size_t>{1, 0}));
}

TEST(Assignment, LexicographicTieBreak) {
    // Every permutation costs the same: the identity is returned.
    CostMatrix flat(4, std::vector<double>(4, 2.0));
    auto r = assignment_bruteforce(flat);
    EXPECT_EQ(r.permutation, (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(r.cost, 2.0);
}

TEST(Assignment, MatchesRecursiveEnumeration) {
    Rng rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = static_cast<std::size_t>(frechet::testing::uniform_int(rng, 1, 6));
        CostMatrix c(n, std::vector<double>(n));
        for (auto& row : c)
            for (auto& x : row)
                x = frechet::testing::uniform(rng, 0, 5);
        auto r = assignment_bruteforce(c);
        EXPECT_NEAR(r.cost, recursive_min(c), 1e-12);
        double check = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            check += c[i][r.permutation[i]];
        EXPECT_NEAR(check / static_cast<double>(n), r.cost, 1e-12);
    }
}

TEST(Assignment, Errors) {
    EXPECT_THROW(assignment_bruteforce(CostMatrix(9, std::vector<double>(9, 0.0))), EnumerationCapExceeded);
    EXPECT_THROW(assignment_bruteforce({{0, 1}}), InvalidArgument);
    EXPECT_THROW(assignment_bruteforce({}), EmptyInput);
    EXPECT_THROW(assignment_bruteforce({{-1.0}}), InvalidArgument);
}

TEST(Rationalize, Examples) {
    auto half = rationalize(Law1D::uniform({0, 1}), 8);
    EXPECT_EQ(half, (std::vector<double>{0, 1}));
    auto third = rationalize(Law1D({0, 1}, {2.0 / 3, 1.0 / 3}), 8);
    EXPECT_EQ(third, (std::vector<double>{0, 0, 1}));
    auto tenth = rationalize_weights(std::vector<double>{0.3, 0.7}, 10);
    EXPECT_EQ(tenth.denominator, 10u);
    EXPECT_EQ(tenth.counts, (std::vector<std::size_t>{3, 7}));
    EXPECT_THROW(rationalize_weights(std::vector<double>{0.3, 0.7}, 8), RationalizationFailure);
    EXPECT_THROW(rationalize_weights(std::vector<double>{1.0 / std::numbers::pi, 1 - 1.0 / std::numbers::pi}, 8),
                 RationalizationFailure);
    DiscreteLawD d2({{0, 0}, {1, 1}}, {0.25, 0.75});
    EXPECT_EQ(rationalize(d2, 8).size(), 4u);
}

TEST(ExactOt, Examples) {
    auto r = exact_ot(Law1D::point_mass(2), Law1D::point_mass(-1.5), 1);
    EXPECT_DOUBLE_EQ(r.cost, 3.5);
    DiscreteLawD a({{0, 0}, {1, 0}}, {0.5, 0.5});
    DiscreteLawD b({{0, 1}, {1, 1}}, {0.5, 0.5});
    auto v = exact_ot(a, b, 2);
    EXPECT_DOUBLE_EQ(v.cost, 1.0);
    EXPECT_EQ(v.plan.mass[0][0], 0.5);
    EXPECT_EQ(v.plan.mass[0][1], 0.0);
    EXPECT_THROW(exact_ot(Law1D({0, 1}, {0.3, 0.7}), Law1D::point_mass(0), 1, 10), EnumerationCapExceeded);
    EXPECT_THROW(exact_ot(Law1D({0, 1}, {0.2, 0.8}), Law1D({0, 1}, {1.0 / 3, 2.0 / 3}), 1, 8),
                 RationalizationFailure);
    EXPECT_THROW(exact_ot(a, DiscreteLawD(Law1D::point_mass(0)), 1), DimensionMismatch);
}

TEST(ExactOt, PlansHaveExactMarginalsAndCostIsOrderInvariant) {
    Rng rng(62);
    for (int trial = 0; trial < 200; ++trial) {
        int d = frechet::testing::uniform_int(rng, 1, 8);
        auto a = frechet::testing::random_rational_law(rng, d);
        auto b = frechet::testing::random_rational_law(rng, d);
        double p = frechet::testing::uniform(rng, 1.0, 3.0);
        auto r = exact_ot(a, b, p);
        EXPECT_LE(r.plan.marginal_error(), 1e-12);
        double plan_cost = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                plan_cost += r.plan.mass[i][j] * std::pow(std::abs(a.atoms()[i] - b.atoms()[j]), p);
        EXPECT_NEAR(plan_cost, r.cost, 1e-12);

        // Same laws presented as R^1 laws with shuffled support order.
        std::vector<std::vector<double>> sa, sb;
        std::vector<double> wa, wb;
        for (std::size_t i = a.size(); i-- > 0;) {
            sa.push_back({a.atoms()[i]});
            wa.push_back(a.weights()[i]);
        }
        for (std::size_t j = b.size(); j-- > 0;) {
            sb.push_back({b.atoms()[j]});
            wb.push_back(b.weights()[j]);
        }
        EXPECT_NEAR(exact_ot(DiscreteLawD(sa, wa), DiscreteLawD(sb, wb), p).cost, r.cost, 1e-12);
    }
}

TEST(ExactOt, FinerSplittingKeepsTheOptimum) {
    Rng rng(63);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = frechet::testing::random_rational_law(rng, 4, 4);
        auto b = frechet::testing::random_rational_law(rng, 4, 4);
        auto base = exact_ot(a, b, 2).cost;
        // Split into 8 equal masses instead of 4: same laws, finer split.
        CostMatrix c(8, std::vector<double>(8));
        std::vector<double> xa, xb;
        for (std::size_t i : detail::split_atoms(a.weights(), 8))
            xa.push_back(a.atoms()[i]);
        for (std::size_t j : detail::split_atoms(b.weights(), 8))
            xb.push_back(b.atoms()[j]);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                c[i][j] = (xa[i] - xb[j]) * (xa[i] - xb[j]);
        EXPECT_NEAR(assignment_bruteforce(c).cost, base, 1e-12);
    }
}

TEST(ExactOt, OneDimensionalCostIsWasserstein) {
    Rng rng(64);
    for (int trial = 0; trial < 200; ++trial) {
        int d = frechet::testing::uniform_int(rng, 1, 8);
        auto a = frechet::testing::random_rational_law(rng, d);
        auto b = frechet::testing::random_rational_law(rng, d);
        for (double p : {1.0, 2.0, 3.0})
            EXPECT_NEAR(std::pow(exact_ot(a, b, p).cost, 1.0 / p), wasserstein_p(a, b, p), 1e-9);
    }
}

TEST(VertexCouplings, Examples) {
    auto dd = vertex_couplings(Law1D::point_mass(1), Law1D::point_mass(2));
    ASSERT_EQ(dd.size(), 1u);
    EXPECT_EQ(dd[0].pairs()[0], (CouplingPair{1, 2, 1.0}));
    EXPECT_EQ(vertex_couplings(Law1D::uniform({0, 1}), Law1D::uniform({0, 1})).size(), 2u);
    auto three = vertex_couplings(Law1D::uniform({0, 1, 2}), Law1D::uniform({5, 6, 7}));
    ASSERT_EQ(three.size(), 6u);
    for (const auto& c : three) {
        EXPECT_EQ(c.marginal_x(), Law1D::uniform({0, 1, 2}));
        EXPECT_EQ(c.marginal_y(), Law1D::uniform({5, 6, 7}));
    }
    // Repeated split atoms collapse to the distinct aggregated couplings.
    EXPECT_EQ(vertex_couplings(Law1D({0, 1}, {0.5, 0.5}), Law1D({0, 1}, {0.25, 0.75})).size(), 2u);
}
