#ifndef FRECHET_CURVE_SAMPLED_METRICS_HPP
#define FRECHET_CURVE_SAMPLED_METRICS_HPP

// Set-based curve distances evaluated on a densified sampling of one curve
// against the exact segments of the other. Each result is within
// `resolution` of the exact value.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "frechet/curve/polyline.hpp"
#include "frechet/error.hpp"

namespace frechet {

namespace detail {

inline double point_segment_distance(std::span<const double> c,
                                     std::span<const double> a,
                                     std::span<const double> b) noexcept {
    double dd = 0.0, dw = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        double d = b[k] - a[k];
        dd += d * d;
        dw += (c[k] - a[k]) * d;
    }
    double t = dd > 0.0 ? std::clamp(dw / dd, 0.0, 1.0) : 0.0;
    double s = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        double d = a[k] + t * (b[k] - a[k]) - c[k];
        s += d * d;
    }
    return std::sqrt(s);
}

inline double point_curve_distance(std::span<const double> c, const Polyline& q) noexcept {
    if (q.size() == 1)
        return distance(c, q.front());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < q.edges(); ++j)
        best = std::min(best, point_segment_distance(c, q[j], q[j + 1]));
    return best;
}

inline void check_resolution(double resolution) {
    if (!(resolution > 0.0))
        throw InvalidArgument("resolution must be positive");
}

/// Calls f(point) for sample points along `p` spaced at most `resolution`
/// apart, including every vertex.
template <typename F>
void for_each_sample(const Polyline& p, double resolution, F&& f) {
    f(p.front());
    std::vector<double> buf(p.dim());
    for (std::size_t i = 0; i < p.edges(); ++i) {
        auto a = p[i];
        auto b = p[i + 1];
        auto steps = static_cast<std::size_t>(std::ceil(p.edge_length(i) / resolution));
        steps = std::max<std::size_t>(steps, 1);
        for (std::size_t s = 1; s <= steps; ++s) {
            double t = static_cast<double>(s) / static_cast<double>(steps);
            for (std::size_t k = 0; k < p.dim(); ++k)
                buf[k] = a[k] + t * (b[k] - a[k]);
            f(std::span<const double>(buf));
        }
    }
}

}  // namespace detail

/// Directed Hausdorff distance sup_{a in P} inf_{b in Q} |a - b|.
inline double directed_maxmin(const Polyline& p, const Polyline& q, double resolution) {
    require_same_dimension(p, q);
    detail::check_resolution(resolution);
    double worst = 0.0;
    detail::for_each_sample(p, resolution, [&](std::span<const double> a) {
        worst = std::max(worst, detail::point_curve_distance(a, q));
    });
    return worst;
}

/// Smallest distance between a point of P and a point of Q.
inline double shortest_distance(const Polyline& p, const Polyline& q, double resolution) {
    require_same_dimension(p, q);
    detail::check_resolution(resolution);
    double best = std::numeric_limits<double>::infinity();
    detail::for_each_sample(p, resolution, [&](std::span<const double> a) {
        best = std::min(best, detail::point_curve_distance(a, q));
    });
    return best;
}

inline double hausdorff(const Polyline& p, const Polyline& q, double resolution) {
    return std::max(directed_maxmin(p, q, resolution), directed_maxmin(q, p, resolution));
}

}  // namespace frechet

#endif  // FRECHET_CURVE_SAMPLED_METRICS_HPP
