#ifndef FRECHET_CURVE_FRECHET_DISTANCE_HPP
#define FRECHET_CURVE_FRECHET_DISTANCE_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "frechet/curve/free_space.hpp"
#include "frechet/curve/polyline.hpp"
#include "frechet/error.hpp"

namespace frechet {

inline constexpr double default_frechet_tolerance = 1e-9;

/// A distance known only up to a bracket. `value` is the upper end of the
/// bracket, which is always a feasible threshold.
struct CurveDistanceResult {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double tolerance = default_frechet_tolerance;
};

/// Discrete Fréchet distance: min over monotone vertex couplings of the
/// largest coupled vertex distance. O(mn) time, O(n) memory.
inline double discrete_frechet(const Polyline& p, const Polyline& q) {
    require_same_dimension(p, q);
    const std::size_t m = p.size();
    const std::size_t n = q.size();
    std::vector<double> prev(n), cur(n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double d = detail::distance(p[i], q[j]);
            double best;
            if (i == 0 && j == 0)
                best = d;
            else if (i == 0)
                best = std::max(cur[j - 1], d);
            else if (j == 0)
                best = std::max(prev[0], d);
            else
                best = std::max(std::min({prev[j], prev[j - 1], cur[j - 1]}), d);
            cur[j] = best;
        }
        std::swap(prev, cur);
    }
    return prev[n - 1];
}

/// Continuous Fréchet distance by bisection on the decision procedure.
///
/// The bracket starts at [max endpoint distance, discrete Fréchet] and is
/// halved until hi - lo <= tol * max(1, hi). When the lower end is already
/// feasible (e.g. two segments) the result is exact.
inline CurveDistanceResult frechet_distance(const Polyline& p, const Polyline& q,
                                            double tol = default_frechet_tolerance) {
    require_same_dimension(p, q);
    if (!(tol > 0.0))
        throw InvalidArgument("tolerance must be positive");

    if (p.size() == 1 || q.size() == 1) {
        double v = p.size() == 1 ? detail::max_vertex_distance(p.front(), q)
                                 : detail::max_vertex_distance(q.front(), p);
        return {v, v, v, tol};
    }

    double lo = std::max(detail::distance(p.front(), q.front()),
                         detail::distance(p.back(), q.back()));
    double hi = discrete_frechet(p, q);
    if (hi <= lo || frechet_decision(p, q, lo))
        return {lo, lo, lo, tol};

    for (int iter = 0; iter < 200 && hi - lo > tol * std::max(1.0, hi); ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (frechet_decision(p, q, mid))
            hi = mid;
        else
            lo = mid;
    }
    return {hi, lo, hi, tol};
}

/// Dynamic time warping: min over warping paths with steps (1,0), (0,1),
/// (1,1) of the summed Euclidean vertex distances.
inline double dtw(const Polyline& p, const Polyline& q) {
    require_same_dimension(p, q);
    const std::size_t n = q.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> prev(n + 1, inf), cur(n + 1, inf);
    prev[0] = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        cur[0] = inf;
        for (std::size_t j = 0; j < n; ++j) {
            double d = detail::distance(p[i], q[j]);
            cur[j + 1] = d + std::min({prev[j + 1], prev[j], cur[j]});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

}  // namespace frechet

#endif  // FRECHET_CURVE_FRECHET_DISTANCE_HPP
