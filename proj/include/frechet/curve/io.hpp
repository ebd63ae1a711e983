#ifndef FRECHET_CURVE_IO_HPP
#define FRECHET_CURVE_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "frechet/curve/polyline.hpp"
#include "frechet/detail/csv.hpp"
#include "frechet/detail/format.hpp"

namespace frechet {

/// Curve CSV: one vertex per row, columns x1..xd, an optional header row and
/// '#' comment lines.
inline Polyline read_polyline_csv(std::istream& in) {
    auto table = detail::read_numeric_table(in, true);
    if (table.rows.empty())
        throw EmptyInput("curve file has no vertices");
    std::vector<double> flat;
    flat.reserve(table.rows.size() * table.columns);
    for (const auto& r : table.rows)
        flat.insert(flat.end(), r.begin(), r.end());
    return Polyline(table.columns, flat);
}

inline Polyline read_polyline_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    return read_polyline_csv(in);
}

inline void write_polyline_csv(std::ostream& out, const Polyline& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto v = p[i];
        for (std::size_t k = 0; k < v.size(); ++k)
            out << (k ? "," : "") << detail::format_short(v[k]);
        out << '\n';
    }
}

}  // namespace frechet

#endif  // FRECHET_CURVE_IO_HPP
