#ifndef FRECHET_LAW_LEVY_HPP
#define FRECHET_LAW_LEVY_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frechet/curve/polyline.hpp"
#include "frechet/error.hpp"
#include "frechet/law/law1d.hpp"

namespace frechet {

/// Completed CDF graph: the staircase of F with its jumps filled in by
/// vertical segments, drawn from (lo, 0) to (hi, 1). Requires lo below the
/// first atom and hi above the last one.
inline Polyline cdf_graph(const Law1D& law, double lo, double hi) {
    if (!(lo < law.atoms().front() && hi > law.atoms().back()))
        throw InvalidArgument("CDF graph range must strictly contain the atoms");
    std::vector<double> flat{lo, 0.0};
    double level = 0.0;
    for (std::size_t k = 0; k < law.size(); ++k) {
        double x = law.atoms()[k];
        flat.insert(flat.end(), {x, level, x, law.cumulative()[k]});
        level = law.cumulative()[k];
    }
    flat.insert(flat.end(), {hi, 1.0});
    return Polyline(2, flat);
}

namespace detail {

/// Common x-range of the completed graphs of two laws: the joint atom range
/// widened by one unit on each side.
inline std::pair<double, double> joint_graph_range(const Law1D& a, const Law1D& b) {
    return {std::min(a.atoms().front(), b.atoms().front()) - 1.0,
            std::max(a.atoms().back(), b.atoms().back()) + 1.0};
}

/// x-coordinate where the line x + y = c meets a completed CDF graph.
/// Along the graph x + y strictly increases, so the meeting point is unique.
inline double graph_meet(const Polyline& g, double c) {
    std::size_t lo = 0, hi = g.size() - 1;
    auto s = [&](std::size_t k) { return g[k][0] + g[k][1]; };
    if (c <= s(lo))
        return c - g[lo][1];
    if (c >= s(hi))
        return c - g[hi][1];
    while (hi - lo > 1) {
        std::size_t mid = (lo + hi) / 2;
        (s(mid) <= c ? lo : hi) = mid;
    }
    double f = (c - s(lo)) / (s(hi) - s(lo));
    return g[lo][0] + f * (g[hi][0] - g[lo][0]);
}

}  // namespace detail

/// Largest distance |AA'| between the points where a line x + y = c meets
/// the two completed CDF graphs. Both points lie on the same anti-diagonal,
/// so |AA'| = sqrt(2) |x_A - x_A'|, which is piecewise linear in c; the
/// maximum is taken over the corner values of both graphs.
inline double levy_1950_def1(const Law1D& a, const Law1D& b) {
    auto [lo, hi] = detail::joint_graph_range(a, b);
    Polyline ga = cdf_graph(a, lo, hi);
    Polyline gb = cdf_graph(b, lo, hi);
    double worst = 0.0;
    for (const Polyline* g : {&ga, &gb})
        for (std::size_t k = 0; k < g->size(); ++k) {
            double c = (*g)[k][0] + (*g)[k][1];
            worst = std::max(worst, std::abs(detail::graph_meet(ga, c) - detail::graph_meet(gb, c)));
        }
    return std::sqrt(2.0) * worst;
}

enum class PointMetric { euclidean, taxicab };

inline PointMetric parse_point_metric(std::string_view name) {
    if (name == "euclidean")
        return PointMetric::euclidean;
    if (name == "taxicab")
        return PointMetric::taxicab;
    throw InvalidArgument("unknown point metric '" + std::string(name) + "'");
}

/// Default sampling density of levy_1950_def2, relative to the graph extent.
inline constexpr double levy_def2_resolution = 1e-4;

namespace detail {

/// Distance from (px, py) to a completed CDF graph. Every edge is axis
/// aligned, so clamping onto the edge gives the nearest point in both the
/// Euclidean and the taxicab norm.
inline double point_graph_distance(double px, double py, const Polyline& g, PointMetric metric) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
        double x = std::clamp(px, std::min(g[k][0], g[k + 1][0]), std::max(g[k][0], g[k + 1][0]));
        double y = std::clamp(py, std::min(g[k][1], g[k + 1][1]), std::max(g[k][1], g[k + 1][1]));
        double dx = std::abs(px - x), dy = std::abs(py - y);
        best = std::min(best, metric == PointMetric::taxicab ? dx + dy : std::hypot(dx, dy));
    }
    return best;
}

inline double directed_graph_distance(const Polyline& from, const Polyline& to,
                                      PointMetric metric, double spacing) {
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < from.size(); ++k) {
        double len = from.edge_length(k);
        auto steps = static_cast<std::size_t>(std::ceil(len / spacing));
        steps = std::max<std::size_t>(steps, 1);
        for (std::size_t s = 0; s <= steps; ++s) {
            auto pt = from.point_on_edge(k, static_cast<double>(s) / static_cast<double>(steps));
            worst = std::max(worst, point_graph_distance(pt[0], pt[1], to, metric));
        }
    }
    return worst;
}

}  // namespace detail

/// Symmetric Hausdorff distance between the two completed CDF graphs under
/// the chosen planar norm. Each graph is sampled with spacing
/// `resolution` times its extent (x-range plus unit height), so the result
/// is within that spacing of the exact value.
inline double levy_1950_def2(const Law1D& a, const Law1D& b,
                             PointMetric metric = PointMetric::euclidean,
                             double resolution = levy_def2_resolution) {
    if (!(resolution > 0.0 && resolution < 1.0))
        throw InvalidArgument("resolution must lie in (0,1)");
    auto [lo, hi] = detail::joint_graph_range(a, b);
    Polyline ga = cdf_graph(a, lo, hi);
    Polyline gb = cdf_graph(b, lo, hi);
    double spacing = resolution * ((hi - lo) + 1.0);
    return std::max(detail::directed_graph_distance(ga, gb, metric, spacing),
                    detail::directed_graph_distance(gb, ga, metric, spacing));
}

}  // namespace frechet

#endif  // FRECHET_LAW_LEVY_HPP
