#ifndef FRECHET_DETAIL_JSON_IO_HPP
#define FRECHET_DETAIL_JSON_IO_HPP

#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <string>
#include <vector>

#include <json.hpp>

#include "frechet/error.hpp"

namespace frechet::detail {

using json = nlohmann::json;

inline std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path);
    return read_all(in);
}

/// True when the first non-blank character opens a JSON object or array.
inline bool looks_like_json(const std::string& text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && (text[pos] == '{' || text[pos] == '[');
}

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

inline const json& require_member(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(std::string("missing JSON member \"") + key + "\"");
    return obj.at(key);
}

inline double to_number(const json& v) {
    if (!v.is_number())
        throw ParseError("expected a JSON number");
    double x = v.get<double>();
    if (!std::isfinite(x))
        throw NonFiniteValue("non-finite number in input");
    return x;
}

inline std::vector<double> to_numbers(const json& v) {
    if (!v.is_array())
        throw ParseError("expected a JSON array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(to_number(x));
    return out;
}

inline std::vector<std::vector<double>> to_matrix(const json& v) {
    if (!v.is_array())
        throw ParseError("expected a JSON array of rows");
    std::vector<std::vector<double>> out;
    for (const auto& row : v)
        out.push_back(to_numbers(row));
    return out;
}

}  // namespace frechet::detail

#endif  // FRECHET_DETAIL_JSON_IO_HPP
