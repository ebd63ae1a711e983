#ifndef FRECHET_DIVERGENCE_IO_HPP
#define FRECHET_DIVERGENCE_IO_HPP

#include <istream>
#include <ostream>
#include <string>

#include "frechet/detail/json_io.hpp"
#include "frechet/divergence/discrete_law.hpp"
#include "frechet/law/io.hpp"

namespace frechet {

/// Law on R^d from JSON {"support": [[...], ...], "weights": [...]}. A law on
/// the line in any format accepted by parse_law is also accepted.
inline DiscreteLawD parse_discrete_law(const std::string& text) {
    if (detail::looks_like_json(text)) {
        auto doc = detail::parse_json(text);
        if (doc.is_object() && doc.contains("support"))
            return DiscreteLawD(detail::to_matrix(doc.at("support")),
                                detail::to_numbers(detail::require_member(doc, "weights")));
    }
    return DiscreteLawD(parse_law(text));
}

inline DiscreteLawD read_discrete_law(std::istream& in) { return parse_discrete_law(detail::read_all(in)); }

inline DiscreteLawD read_discrete_law(const std::string& path) {
    return parse_discrete_law(detail::read_file(path));
}

inline void write_discrete_law_json(std::ostream& out, const DiscreteLawD& law) {
    detail::json support = detail::json::array();
    for (std::size_t i = 0; i < law.size(); ++i) {
        auto x = law.point(i);
        support.push_back(std::vector<double>(x.begin(), x.end()));
    }
    detail::json doc{{"support", support},
                     {"weights", std::vector<double>(law.weights().begin(), law.weights().end())}};
    out << doc.dump() << '\n';
}

}  // namespace frechet

#endif  // FRECHET_DIVERGENCE_IO_HPP
