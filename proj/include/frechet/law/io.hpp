#ifndef FRECHET_LAW_IO_HPP
#define FRECHET_LAW_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "frechet/detail/csv.hpp"
#include "frechet/detail/format.hpp"
#include "frechet/detail/json_io.hpp"
#include "frechet/law/coupling.hpp"
#include "frechet/law/law1d.hpp"

namespace frechet {

/// Parses a law from text: a JSON object {"atoms": [...], "weights": [...]}
/// or a CSV list of samples, one value per line (an optional header row),
/// read as the empirical law.
inline Law1D parse_law(const std::string& text) {
    if (detail::looks_like_json(text)) {
        auto doc = detail::parse_json(text);
        return Law1D(detail::to_numbers(detail::require_member(doc, "atoms")),
                     detail::to_numbers(detail::require_member(doc, "weights")));
    }
    std::istringstream in(text);
    auto table = detail::read_numeric_table(in, true);
    if (table.rows.empty())
        throw EmptyInput("law file has no samples");
    if (table.columns != 1)
        throw ParseError("sample files hold one value per line");
    std::vector<double> values;
    values.reserve(table.rows.size());
    for (const auto& r : table.rows)
        values.push_back(r[0]);
    return from_samples(values);
}

inline Law1D read_law(std::istream& in) { return parse_law(detail::read_all(in)); }

inline Law1D read_law(const std::string& path) { return parse_law(detail::read_file(path)); }

inline void write_law_json(std::ostream& out, const Law1D& law) {
    detail::json doc;
    doc["atoms"] = std::vector<double>(law.atoms().begin(), law.atoms().end());
    doc["weights"] = std::vector<double>(law.weights().begin(), law.weights().end());
    out << doc.dump() << '\n';
}

/// Couplings as a JSON array of [x, y, w] triples.
inline void write_coupling_json(std::ostream& out, const Coupling1D& c) {
    auto doc = detail::json::array();
    for (const auto& p : c.pairs())
        doc.push_back({p.x, p.y, p.w});
    out << doc.dump() << '\n';
}

inline Coupling1D parse_coupling(const std::string& text) {
    auto doc = detail::parse_json(text);
    std::vector<CouplingPair> pairs;
    for (const auto& row : detail::to_matrix(doc)) {
        if (row.size() != 3)
            throw ParseError("coupling entries are [x, y, w] triples");
        pairs.push_back({row[0], row[1], row[2]});
    }
    return Coupling1D(std::move(pairs));
}

}  // namespace frechet

#endif  // FRECHET_LAW_IO_HPP
