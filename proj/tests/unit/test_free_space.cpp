#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "frechet/curve/free_space.hpp"
#include "frechet/curve/frechet_distance.hpp"
#include "support/generators.hpp"

using namespace frechet;
using frechet::testing::Rng;

namespace {

// Sampling oracle: [min, max] of the parameters in {0, 1/N, ..., 1} where the
// moving point along (u,v) is within eps of c. Valid for convex free sets.
Interval sampled_interval(std::span<const double> c, std::span<const double> u,
                          std::span<const double> v, double eps, int samples = 20000) {
    Interval r = Interval::none();
    for (int k = 0; k <= samples; ++k) {
        double t = static_cast<double>(k) / samples;
        double s = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            double d = u[i] + t * (v[i] - u[i]) - c[i];
            s += d * d;
        }
        if (std::sqrt(s) <= eps) {
            if (r.empty())
                r = {t, t};
            r.hi = t;
        }
    }
    return r;
}

void expect_interval_near(const Interval& got, const Interval& want, double tol) {
    ASSERT_EQ(got.empty(), want.empty());
    if (!want.empty()) {
        EXPECT_NEAR(got.lo, want.lo, tol);
        EXPECT_NEAR(got.hi, want.hi, tol);
    }
}

const std::vector<double> o{0, 0}, e1{1, 0}, up{0, 1}, up1{1, 1};

}  // namespace

TEST(FreeSpaceCell, CoincidentSegmentsAtZeroAreCornerPoints) {
    // The free set of a segment against itself at eps = 0 is the diagonal
    // s = t, so each side is free at exactly one endpoint.
    auto cell = free_space_cell({o, e1}, {o, e1}, 0.0);
    expect_interval_near(cell.left, {0, 0}, 1e-11);
    expect_interval_near(cell.bottom, {0, 0}, 1e-11);
    expect_interval_near(cell.right, {1, 1}, 1e-11);
    expect_interval_near(cell.top, {1, 1}, 1e-11);
}

TEST(FreeSpaceCell, OffsetParallelSegmentsBelowDistanceAreEmpty) {
    auto cell = free_space_cell({o, e1}, {up, up1}, 0.5);
    EXPECT_TRUE(cell.left.empty());
    EXPECT_TRUE(cell.right.empty());
    EXPECT_TRUE(cell.bottom.empty());
    EXPECT_TRUE(cell.top.empty());
    // Dense sampling agrees.
    EXPECT_TRUE(sampled_interval(o, up, up1, 0.5).empty());
}

TEST(FreeSpaceCell, OffsetParallelSegmentsAtDistanceAreTangentPoints) {
    auto cell = free_space_cell({o, e1}, {up, up1}, 1.0);
    // (s - t)^2 + 1 <= 1 only on the diagonal.
    expect_interval_near(cell.bottom, {0, 0}, 1e-11);
    expect_interval_near(cell.left, {0, 0}, 1e-11);
    expect_interval_near(cell.right, {1, 1}, 1e-11);
    expect_interval_near(cell.top, {1, 1}, 1e-11);
}

TEST(FreeSpaceCell, MatchesDenseSamplingOnRandomSegments) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t d = static_cast<std::size_t>(frechet::testing::uniform_int(rng, 1, 3));
        auto rnd = [&] {
            std::vector<double> v(d);
            for (auto& x : v)
                x = frechet::testing::uniform(rng, -1, 1);
            return v;
        };
        auto pa = rnd(), pb = rnd(), qa = rnd(), qb = rnd();
        double eps = frechet::testing::uniform(rng, 0.05, 1.5);
        auto cell = free_space_cell({pa, pb}, {qa, qb}, eps);
        expect_interval_near(cell.left, sampled_interval(pa, qa, qb, eps), 2e-4);
        expect_interval_near(cell.right, sampled_interval(pb, qa, qb, eps), 2e-4);
        expect_interval_near(cell.bottom, sampled_interval(qa, pa, pb, eps), 2e-4);
        expect_interval_near(cell.top, sampled_interval(qb, pa, pb, eps), 2e-4);
    }
}

TEST(FreeSpaceCell, DegenerateSegmentFallsBackToConstant) {
    std::vector<double> c{0.5, 0.5};
    auto inside = detail::ball_segment_interval(o, c, c, 1.0);
    EXPECT_EQ(inside, Interval::unit());
    auto outside = detail::ball_segment_interval(o, c, c, 0.5);
    EXPECT_TRUE(outside.empty());
}

TEST(FreeSpaceCell, IntervalsGrowWithEpsilon) {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = frechet::testing::random_polyline(rng, 2);
        auto q = frechet::testing::random_polyline(rng, 2);
        FreeSpaceCell prev = free_space_cell(edge(p, 0), edge(q, 0), 0.0);
        for (double eps = 0.05; eps < 1.5; eps += 0.05) {
            auto cur = free_space_cell(edge(p, 0), edge(q, 0), eps);
            for (auto [a, b] : {std::pair{prev.left, cur.left}, {prev.right, cur.right},
                                {prev.bottom, cur.bottom}, {prev.top, cur.top}}) {
                if (!a.empty()) {
                    ASSERT_FALSE(b.empty());
                    EXPECT_LE(b.lo, a.lo);
                    EXPECT_GE(b.hi, a.hi);
                }
                if (!b.empty()) {
                    EXPECT_GE(b.lo, 0.0);
                    EXPECT_LE(b.hi, 1.0);
                }
            }
            prev = cur;
        }
    }
}

TEST(FreeSpaceCell, RejectsMixedDimensions) {
    std::vector<double> a3{0, 0, 0}, b3{1, 0, 0};
    EXPECT_THROW(free_space_cell({o, e1}, {a3, b3}, 1.0), DimensionMismatch);
}

TEST(FreeSpaceDiagram, ReachableIntervalsLieInsideFreeIntervals) {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = frechet::testing::random_polyline(rng, 6);
        auto q = frechet::testing::random_polyline(rng, 5);
        double eps = frechet::testing::uniform(rng, 0.2, 0.9);
        FreeSpaceDiagram fsd(p, q, eps);
        EXPECT_EQ(fsd.end_reachable(), frechet_decision(p, q, eps));
        for (std::size_t j = 0; j < fsd.rows(); ++j)
            for (std::size_t i = 0; i < fsd.columns(); ++i) {
                const auto& c = fsd.cell(i, j);
                const auto& l = fsd.reachable_left(i, j);
                const auto& b = fsd.reachable_bottom(i, j);
                if (!l.empty()) {
                    EXPECT_GE(l.lo, c.left.lo);
                    EXPECT_LE(l.hi, c.left.hi);
                }
                if (!b.empty()) {
                    EXPECT_GE(b.lo, c.bottom.lo);
                    EXPECT_LE(b.hi, c.bottom.hi);
                }
            }
    }
}

TEST(FrechetDecision, IdenticalCurvesAtZero) {
    Rng rng(3);
    auto p = frechet::testing::random_polyline(rng, 8);
    EXPECT_TRUE(frechet_decision(p, p, 0.0));
}

TEST(FrechetDecision, OffsetSegmentsThreshold) {
    Polyline p{{0, 0}, {1, 0}};
    Polyline q{{0, 1}, {1, 1}};
    EXPECT_FALSE(frechet_decision(p, q, 0.5));
    EXPECT_TRUE(frechet_decision(p, q, 1.0));
    EXPECT_FALSE(frechet_decision(p, q, 1.0 - 1e-9));
}

TEST(FrechetDecision, SinusoidFamilyIsSeparated) {
    auto c1 = frechet::testing::sinusoid_curve(1, 2048);
    auto c2 = frechet::testing::sinusoid_curve(2, 2048);
    EXPECT_FALSE(frechet_decision(c1, c2, 0.9));
}

TEST(FrechetDecision, MonotoneInEpsilon) {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = frechet::testing::random_polyline(rng, 7);
        auto q = frechet::testing::random_polyline(rng, 6);
        bool seen_true = false;
        for (double eps = 0.0; eps <= 1.5; eps += 0.01) {
            bool d = frechet_decision(p, q, eps);
            if (seen_true) {
                EXPECT_TRUE(d) << "eps=" << eps;
            }
            seen_true = seen_true || d;
        }
        EXPECT_TRUE(seen_true);
    }
}

TEST(FrechetDecision, SinglePointCurve) {
    Polyline point{{0, 0}};
    Polyline q{{1, 0}, {0, 2}, {-1, 0}};
    EXPECT_TRUE(frechet_decision(point, q, 2.0));
    EXPECT_FALSE(frechet_decision(point, q, 1.99));
    EXPECT_TRUE(frechet_decision(q, point, 2.0));
}

TEST(FrechetDecision, Errors) {
    Polyline p2{{0, 0}, {1, 0}};
    Polyline p3{{0, 0, 0}, {1, 0, 0}};
    EXPECT_THROW(frechet_decision(p2, p3, 1.0), DimensionMismatch);
    EXPECT_THROW(frechet_decision(p2, p2, -1.0), InvalidArgument);
}
