#ifndef FRECHET_LAW_QUANTILE_GRAPH_HPP
#define FRECHET_LAW_QUANTILE_GRAPH_HPP

#include <vector>

#include "frechet/curve/polyline.hpp"
#include "frechet/error.hpp"
#include "frechet/law/law1d.hpp"

namespace frechet {

/// Planar quantile graph t -> (t, Q(t)) sampled at the midpoints
/// t_i = (i - 1/2) / n of n equal level intervals.
inline Polyline quantile_graph(const Law1D& law, std::size_t n) {
    if (n < 2)
        throw InvalidArgument("quantile graph needs at least 2 samples");
    std::vector<double> flat;
    flat.reserve(2 * n);
    for (std::size_t i = 1; i <= n; ++i) {
        double t = (static_cast<double>(i) - 0.5) / static_cast<double>(n);
        flat.push_back(t);
        flat.push_back(quantile(law, t));
    }
    return Polyline(2, flat);
}

/// One-dimensional quantile curve t_i -> Q(t_i) at the same midpoints; the
/// ordered image of the quantile function without its parameter.
inline Polyline quantile_curve(const Law1D& law, std::size_t n) {
    if (n < 2)
        throw InvalidArgument("quantile curve needs at least 2 samples");
    std::vector<double> flat;
    flat.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        flat.push_back(quantile(law, (static_cast<double>(i) - 0.5) / static_cast<double>(n)));
    return Polyline(1, flat);
}

}  // namespace frechet

#endif  // FRECHET_LAW_QUANTILE_GRAPH_HPP
