#ifndef FRECHET_CURVE_CLOSED_FRECHET_HPP
#define FRECHET_CURVE_CLOSED_FRECHET_HPP

#include <optional>
#include <vector>

#include "frechet/curve/frechet_distance.hpp"
#include "frechet/curve/polyline.hpp"
#include "frechet/error.hpp"

namespace frechet {

/// Q traversed once around from the point at fraction `f` of edge `k`.
inline Polyline reroot_closed(const Polyline& q, std::size_t k, double f) {
    const std::size_t n = q.edges();
    auto root = q.point_on_edge(k, f);
    std::vector<double> flat(root);
    for (std::size_t step = 1; step <= n; ++step) {
        auto v = q[(k + step) % n];
        flat.insert(flat.end(), v.begin(), v.end());
    }
    flat.insert(flat.end(), root.begin(), root.end());
    return Polyline(q.dim(), flat);
}

/// Fréchet distance between closed curves, taken as the minimum over
/// re-rootings of Q while P stays rooted at its first vertex. Candidate roots
/// are every vertex of Q plus `shifts_per_edge` evenly spaced interior points
/// of each edge, so the result is an upper bound that tightens as
/// `shifts_per_edge` grows.
inline CurveDistanceResult closed_frechet(const Polyline& p_in, const Polyline& q_in,
                                          double tol = default_frechet_tolerance,
                                          std::size_t shifts_per_edge = 4) {
    require_same_dimension(p_in, q_in);
    if (shifts_per_edge < 1)
        throw InvalidArgument("shifts_per_edge must be at least 1");
    Polyline p = normalize_closure(p_in);
    Polyline q = normalize_closure(q_in);
    if (!p.is_closed() || !q.is_closed())
        throw OpenCurve("closed_frechet needs closed polylines (first vertex == last vertex)");

    std::optional<CurveDistanceResult> best;
    const double denom = static_cast<double>(shifts_per_edge + 1);
    for (std::size_t k = 0; k < q.edges(); ++k) {
        for (std::size_t s = 0; s <= shifts_per_edge; ++s) {
            Polyline candidate = reroot_closed(q, k, static_cast<double>(s) / denom);
            if (best) {
                if (detail::distance(p.front(), candidate.front()) >= best->value)
                    continue;
                if (!frechet_decision(p, candidate, best->value))
                    continue;
            }
            CurveDistanceResult r = frechet_distance(p, candidate, tol);
            if (!best || r.value < best->value)
                best = r;
        }
    }
    return *best;
}

}  // namespace frechet

#endif  // FRECHET_CURVE_CLOSED_FRECHET_HPP
