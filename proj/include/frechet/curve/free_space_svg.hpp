#ifndef FRECHET_CURVE_FREE_SPACE_SVG_HPP
#define FRECHET_CURVE_FREE_SPACE_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "frechet/curve/free_space.hpp"
#include "frechet/curve/polyline.hpp"
#include "frechet/detail/format.hpp"

namespace frechet {

struct FreeSpaceSvgOptions {
    std::size_t max_pixels = 512;       // raster size cap per axis
    std::size_t max_samples_per_cell = 32;
    std::size_t grid_line_limit = 128;  // draw cell boundaries up to this many cells per axis
    std::size_t vector_reach_limit = 65536;  // draw reachable intervals as paths up to m*n cells
};

namespace detail {

inline std::size_t raster_size(std::size_t cells, const FreeSpaceSvgOptions& o) {
    if (cells == 0)
        return 1;
    std::size_t per_cell = std::clamp<std::size_t>(o.max_pixels / cells, 1, o.max_samples_per_cell);
    return std::min(cells * per_cell, std::max<std::size_t>(o.max_pixels, 1));
}

}  // namespace detail

/// Renders the free-space diagram of P (horizontal) and Q (vertical) at
/// `epsilon` as an SVG document.
///
/// Free space is a raster sampled at pixel centres (class "free"); the
/// reachable parts of cell boundaries are drawn as a path (class
/// "reachable") or, on large grids, rasterised into pixels of the same
/// class. The corner markers `#start` and `#end` carry class "reachable" or
/// "blocked". Output is a deterministic function of the inputs.
inline std::string free_space_svg(const Polyline& p, const Polyline& q, double epsilon,
                                  const FreeSpaceSvgOptions& opt = {}) {
    require_same_dimension(p, q);
    if (!(epsilon >= 0.0))
        throw InvalidArgument("epsilon must be nonnegative");

    const std::size_t m = p.edges();
    const std::size_t n = q.edges();
    const std::size_t rx = detail::raster_size(m, opt);
    const std::size_t ry = detail::raster_size(n, opt);
    const double sx = static_cast<double>(rx) / static_cast<double>(std::max<std::size_t>(m, 1));
    const double sy = static_cast<double>(ry) / static_cast<double>(std::max<std::size_t>(n, 1));
    using detail::format_short;

    // Diagram coordinates (s in [0,m], t in [0,n]) to SVG user units; t grows upward.
    auto X = [&](double s) { return format_short(s * sx); };
    auto Y = [&](double t) { return format_short(static_cast<double>(ry) - t * sy); };

    const bool start_ok = detail::distance(p.front(), q.front()) <= epsilon;
    bool end_ok = false;

    std::vector<std::string> reach_paths;
    std::vector<unsigned char> reach_pixels;
    const bool vector_reach = m * n <= opt.vector_reach_limit;
    if (!vector_reach)
        reach_pixels.assign(rx * ry, 0);

    auto mark_h = [&](double s0, double s1, double t) {  // horizontal piece at height t
        if (vector_reach) {
            reach_paths.push_back("M" + X(s0) + " " + Y(t) + "H" + X(s1));
            return;
        }
        auto v = std::min<std::size_t>(static_cast<std::size_t>(t * sy), ry - 1);
        auto u0 = std::min<std::size_t>(static_cast<std::size_t>(s0 * sx), rx - 1);
        auto u1 = std::min<std::size_t>(static_cast<std::size_t>(s1 * sx), rx - 1);
        for (std::size_t u = u0; u <= u1; ++u)
            reach_pixels[v * rx + u] = 1;
    };
    auto mark_v = [&](double t0, double t1, double s) {  // vertical piece at abscissa s
        if (vector_reach) {
            reach_paths.push_back("M" + X(s) + " " + Y(t0) + "V" + Y(t1));
            return;
        }
        auto u = std::min<std::size_t>(static_cast<std::size_t>(s * sx), rx - 1);
        auto v0 = std::min<std::size_t>(static_cast<std::size_t>(t0 * sy), ry - 1);
        auto v1 = std::min<std::size_t>(static_cast<std::size_t>(t1 * sy), ry - 1);
        for (std::size_t v = v0; v <= v1; ++v)
            reach_pixels[v * rx + u] = 1;
    };

    if (m > 0 && n > 0) {
        end_ok = sweep_reachable(
            p, q, epsilon,
            [&](std::size_t i, std::size_t j, const Interval& left, const Interval& bottom,
                const Interval& top, const Interval& right) {
                double di = static_cast<double>(i), dj = static_cast<double>(j);
                if (!left.empty())
                    mark_v(dj + left.lo, dj + left.hi, di);
                if (!bottom.empty())
                    mark_h(di + bottom.lo, di + bottom.hi, dj);
                if (j + 1 == n && !top.empty())
                    mark_h(di + top.lo, di + top.hi, dj + 1);
                if (i + 1 == m && !right.empty())
                    mark_v(dj + right.lo, dj + right.hi, di + 1);
            });
    } else {
        end_ok = frechet_decision(p, q, epsilon);
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << rx << ' ' << ry
        << "\" width=\"" << rx << "\" height=\"" << ry << "\" data-epsilon=\""
        << format_short(epsilon) << "\" data-columns=\"" << m << "\" data-rows=\"" << n
        << "\" data-end-reachable=\"" << (end_ok ? "true" : "false") << "\">\n"
        << "<style>.free{fill:#9fd39f}.reachable{stroke:#c0392b;fill:#c0392b;stroke-width:1.5}"
           ".grid{stroke:#555;stroke-width:0.5;fill:none}.blocked{fill:#222}</style>\n"
        << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << rx << "\" height=\"" << ry
        << "\" fill=\"#ffffff\"/>\n";

    // Free space raster, run-length encoded per pixel row.
    out << "<g id=\"free-space\">\n";
    const double eps2 = epsilon * epsilon;
    std::vector<double> a(p.dim()), b(q.dim());
    auto sample = [](const Polyline& c, double param, std::vector<double>& dst) {
        if (c.edges() == 0) {
            std::copy(c.front().begin(), c.front().end(), dst.begin());
            return;
        }
        auto i = std::min<std::size_t>(static_cast<std::size_t>(param), c.edges() - 1);
        double f = param - static_cast<double>(i);
        auto u = c[i];
        auto w = c[i + 1];
        for (std::size_t k = 0; k < dst.size(); ++k)
            dst[k] = u[k] + f * (w[k] - u[k]);
    };
    for (std::size_t v = 0; v < ry; ++v) {
        double t = (static_cast<double>(v) + 0.5) / sy;
        sample(q, t, b);
        std::size_t run_start = 0;
        bool in_run = false;
        for (std::size_t u = 0; u <= rx; ++u) {
            bool free = false;
            if (u < rx) {
                sample(p, (static_cast<double>(u) + 0.5) / sx, a);
                free = detail::squared_distance(a, b) <= eps2;
            }
            if (free && !in_run) {
                run_start = u;
                in_run = true;
            } else if (!free && in_run) {
                out << "<rect class=\"free\" x=\"" << run_start << "\" y=\"" << (ry - v - 1)
                    << "\" width=\"" << (u - run_start) << "\" height=\"1\"/>\n";
                in_run = false;
            }
        }
    }
    out << "</g>\n";

    if (m <= opt.grid_line_limit && n <= opt.grid_line_limit) {
        out << "<path class=\"grid\" d=\"";
        for (std::size_t i = 0; i <= m; ++i)
            out << 'M' << X(static_cast<double>(i)) << ' ' << Y(0) << 'V' << Y(static_cast<double>(n));
        for (std::size_t j = 0; j <= n; ++j)
            out << 'M' << X(0) << ' ' << Y(static_cast<double>(j)) << 'H' << X(static_cast<double>(m));
        out << "\"/>\n";
    }

    out << "<g id=\"reachable\">\n";
    if (vector_reach) {
        if (!reach_paths.empty()) {
            out << "<path class=\"reachable\" fill=\"none\" d=\"";
            for (const auto& s : reach_paths)
                out << s;
            out << "\"/>\n";
        }
    } else {
        for (std::size_t v = 0; v < ry; ++v)
            for (std::size_t u = 0; u < rx; ++u)
                if (reach_pixels[v * rx + u])
                    out << "<rect class=\"reachable\" x=\"" << u << "\" y=\"" << (ry - v - 1)
                        << "\" width=\"1\" height=\"1\"/>\n";
    }
    out << "</g>\n";

    out << "<circle id=\"start\" class=\"" << (start_ok ? "reachable" : "blocked")
        << "\" cx=\"" << X(0) << "\" cy=\"" << Y(0) << "\" r=\"3\"/>\n"
        << "<circle id=\"end\" class=\"" << (end_ok ? "reachable" : "blocked") << "\" cx=\""
        << X(static_cast<double>(m)) << "\" cy=\"" << Y(static_cast<double>(n)) << "\" r=\"3\"/>\n"
        << "</svg>\n";
    return out.str();
}

}  // namespace frechet

#endif  // FRECHET_CURVE_FREE_SPACE_SVG_HPP
