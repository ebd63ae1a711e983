#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "frechet/curve/frechet_distance.hpp"
#include "frechet/curve/sampled_metrics.hpp"
#include "support/generators.hpp"

using namespace frechet;
using frechet::testing::Rng;

namespace {

// Brute force over every monotone index path (steps (1,0), (0,1), (1,1)).
double enumerate_paths(const Polyline& p, const Polyline& q, bool sum) {
    double best = std::numeric_limits<double>::infinity();
    std::function<void(std::size_t, std::size_t, double)> walk =
        [&](std::size_t i, std::size_t j, double acc) {
            double d = detail::distance(p[i], q[j]);
            acc = sum ? acc + d : std::max(acc, d);
            if (i + 1 == p.size() && j + 1 == q.size()) {
                best = std::min(best, acc);
                return;
            }
            if (i + 1 < p.size())
                walk(i + 1, j, acc);
            if (j + 1 < q.size())
                walk(i, j + 1, acc);
            if (i + 1 < p.size() && j + 1 < q.size())
                walk(i + 1, j + 1, acc);
        };
    walk(0, 0, 0.0);
    return best;
}

Polyline line1d(std::initializer_list<double> xs) {
    std::vector<double> v(xs);
    return Polyline(1, v);
}

}  // namespace

TEST(DiscreteFrechet, SinglePoints) {
    EXPECT_DOUBLE_EQ(discrete_frechet(Polyline{{0, 0}}, Polyline{{3, 4}}), 5.0);
}

TEST(DiscreteFrechet, WorkedExamples) {
    Polyline p{{0, 0}, {1, 0}, {2, 0}};
    Polyline q{{0, 1}, {1, 1}, {2, 1}};
    EXPECT_DOUBLE_EQ(discrete_frechet(p, q), 1.0);
    EXPECT_DOUBLE_EQ(enumerate_paths(p, q, false), 1.0);

    Polyline a{{0, 0}, {2, 0}};
    Polyline b{{0, 0}, {1, 1}, {2, 0}};
    EXPECT_DOUBLE_EQ(discrete_frechet(a, b), std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(enumerate_paths(a, b, false), std::sqrt(2.0));
    // The continuous distance of the same pair is 1.
    EXPECT_NEAR(frechet_distance(a, b).value, 1.0, 1e-8);
}

TEST(DiscreteFrechet, MatchesPathEnumeration) {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = frechet::testing::random_polyline(rng, static_cast<std::size_t>(frechet::testing::uniform_int(rng, 1, 5)));
        auto q = frechet::testing::random_polyline(rng, static_cast<std::size_t>(frechet::testing::uniform_int(rng, 1, 5)));
        EXPECT_DOUBLE_EQ(discrete_frechet(p, q), enumerate_paths(p, q, false));
    }
}

TEST(Dtw, WorkedExamples) {
    Rng rng(1);
    auto p = frechet::testing::random_polyline(rng, 6);
    EXPECT_DOUBLE_EQ(dtw(p, p), 0.0);
    EXPECT_DOUBLE_EQ(dtw(line1d({0, 1}), line1d({0, 1, 1})), 0.0);
    EXPECT_DOUBLE_EQ(dtw(line1d({0, 2}), line1d({1})), 2.0);
}

TEST(Dtw, MatchesPathEnumeration) {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = frechet::testing::random_polyline(rng, static_cast<std::size_t>(frechet::testing::uniform_int(rng, 1, 5)));
        auto q = frechet::testing::random_polyline(rng, static_cast<std::size_t>(frechet::testing::uniform_int(rng, 1, 5)));
        EXPECT_NEAR(dtw(p, q), enumerate_paths(p, q, true), 1e-12);
    }
}

TEST(FrechetDistance, IdenticalCurves) {
    Rng rng(2);
    auto p = frechet::testing::random_polyline(rng, 9);
    auto r = frechet_distance(p, p);
    EXPECT_LE(r.value, 1e-9);
}

TEST(FrechetDistance, SegmentPairClosedForm) {
    Polyline a{{0, 0}, {1, 0}};
    Polyline b{{0, 1}, {1, 2}};
    auto r = frechet_distance(a, b);
    EXPECT_DOUBLE_EQ(r.value, 2.0);
    EXPECT_LE(r.lo, r.value);
    EXPECT_LE(r.value, r.hi);
}

TEST(FrechetDistance, Translation) {
    Rng rng(4);
    auto p = frechet::testing::random_polyline(rng, 8);
    std::vector<double> flat(p.flat().begin(), p.flat().end());
    for (std::size_t i = 0; i < flat.size(); i += 2) {
        flat[i] += 0.3;
        flat[i + 1] -= 0.4;
    }
    Polyline q(2, flat);
    EXPECT_NEAR(frechet_distance(p, q).value, 0.5, 1e-9);
}

TEST(FrechetDistance, BracketContract) {
    Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = frechet::testing::random_polyline(rng, 6);
        auto q = frechet::testing::random_polyline(rng, 7);
        double tol = 1e-6;
        auto r = frechet_distance(p, q, tol);
        EXPECT_LE(r.lo, r.value);
        EXPECT_LE(r.value, r.hi);
        EXPECT_LE(r.hi - r.lo, tol * std::max(1.0, r.hi));
        EXPECT_TRUE(frechet_decision(p, q, r.hi));
        if (r.lo < r.hi) {
            EXPECT_FALSE(frechet_decision(p, q, r.lo));
        }
    }
}

TEST(FrechetDistance, AgreesWithDenselySubdividedDiscreteDistance) {
    // Independent route: the discrete distance of k-fold subdivisions
    // converges from above, with error at most the longest sub-edge.
    Rng rng(10);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = frechet::testing::random_polyline(rng, 4);
        auto q = frechet::testing::random_polyline(rng, 5);
        double df = frechet_distance(p, q).value;
        const std::size_t k = 64;
        double ddf = discrete_frechet(subdivide(p, k), subdivide(q, k));
        double longest = 0.0;
        for (std::size_t i = 0; i < p.edges(); ++i)
            longest = std::max(longest, p.edge_length(i));
        for (std::size_t i = 0; i < q.edges(); ++i)
            longest = std::max(longest, q.edge_length(i));
        EXPECT_LE(df, ddf + 1e-9);
        EXPECT_LE(ddf - df, longest / static_cast<double>(k) + 1e-9);
    }
}

TEST(FrechetDistance, SymmetryTriangleAndReparameterization) {
    Rng rng(12);
    const double tol = 1e-9;
    for (int trial = 0; trial < 60; ++trial) {
        auto p = frechet::testing::random_polyline(rng, 5);
        auto q = frechet::testing::random_polyline(rng, 6);
        auto r = frechet::testing::random_polyline(rng, 4);
        double pq = frechet_distance(p, q, tol).value;
        double qp = frechet_distance(q, p, tol).value;
        double qr = frechet_distance(q, r, tol).value;
        double pr = frechet_distance(p, r, tol).value;
        EXPECT_NEAR(pq, qp, 2 * tol * std::max(1.0, pq));
        EXPECT_LE(pr, pq + qr + 3 * tol);

        // Insert an interior vertex on a random edge of p.
        std::size_t e = static_cast<std::size_t>(frechet::testing::uniform_int(rng, 0, static_cast<int>(p.edges()) - 1));
        std::vector<double> flat;
        for (std::size_t i = 0; i < p.size(); ++i) {
            flat.insert(flat.end(), p[i].begin(), p[i].end());
            if (i == e) {
                auto mid = p.point_on_edge(e, frechet::testing::uniform(rng, 0.1, 0.9));
                flat.insert(flat.end(), mid.begin(), mid.end());
            }
        }
        Polyline p2(2, flat);
        EXPECT_NEAR(frechet_distance(p2, q, tol).value, pq, 2 * tol * std::max(1.0, pq) + 1e-12);
    }
}

TEST(FrechetDistance, DensificationConvergence) {
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        auto p = frechet::testing::random_polyline(rng, 4);
        auto q = frechet::testing::random_polyline(rng, 4);
        double base = frechet_distance(p, q).value;
        double prev_discrete = discrete_frechet(p, q);
        for (std::size_t k : {2u, 4u, 8u, 16u}) {
            auto pk = subdivide(p, k);
            auto qk = subdivide(q, k);
            EXPECT_NEAR(frechet_distance(pk, qk).value, base, 2e-9);
            double dk = discrete_frechet(pk, qk);
            EXPECT_LE(dk, prev_discrete + 1e-12);
            EXPECT_GE(dk, base - 1e-9);
            prev_discrete = dk;
        }
    }
}

TEST(FrechetDistance, PointCurveIsDirectedMaxmin) {
    Polyline point{{0, 0}};
    Polyline q{{1, 0}, {0, 3}, {-2, 0}};
    auto r = frechet_distance(point, q);
    EXPECT_DOUBLE_EQ(r.value, 3.0);
    EXPECT_NEAR(directed_maxmin(q, point, 1e-3), 3.0, 1e-3);
}

TEST(FrechetDistance, QuantileCurvesOfDifferentLawsCoincide) {
    // Q(t) = t and Q(t) = sqrt(t) sampled at common parameters trace the
    // same ordered image of [0,1] in R.
    const int n = 10000;
    std::vector<double> a, b, am, bm;
    for (int i = 0; i < n; ++i) {
        double t = static_cast<double>(i) / (n - 1);
        a.push_back(t);
        b.push_back(std::sqrt(t));
        double tm = (i + 0.5) / n;
        am.push_back(tm);
        bm.push_back(std::sqrt(tm));
    }
    const double tol = 1e-9;
    EXPECT_LE(frechet_distance(Polyline(1, a), Polyline(1, b), tol).value, 2 * tol);
    // Midpoint sampling only leaves the offset at the first sample, where
    // sqrt is steepest.
    double offset = std::sqrt(0.5 / n) - 0.5 / n;
    EXPECT_NEAR(frechet_distance(Polyline(1, am), Polyline(1, bm), tol).value, offset, 2 * tol);
}

TEST(FrechetDistance, Errors) {
    Polyline p2{{0, 0}, {1, 0}};
    Polyline p1 = line1d({0, 1});
    EXPECT_THROW(frechet_distance(p2, p1), DimensionMismatch);
    EXPECT_THROW(frechet_distance(p2, p2, 0.0), InvalidArgument);
    EXPECT_THROW(discrete_frechet(p2, p1), DimensionMismatch);
    EXPECT_THROW(dtw(p2, p1), DimensionMismatch);
}

TEST(Polyline, CollapsesRepeatedVertices) {
    Polyline p{{0, 0}, {0, 0}, {1, 0}, {1, 0}, {1, 0}, {2, 2}};
    EXPECT_EQ(p.size(), 3u);
    Polyline single{{1, 1}, {1, 1}};
    EXPECT_EQ(single.size(), 1u);
    EXPECT_THROW(Polyline(std::vector<Point>{}), EmptyInput);
    EXPECT_THROW((Polyline{{0, 0}, {1, 0, 0}}), DimensionMismatch);
    EXPECT_THROW(Point({0.0, std::nan("")}), NonFiniteValue);
}
