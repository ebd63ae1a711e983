#ifndef FRECHET_DETAIL_CSV_HPP
#define FRECHET_DETAIL_CSV_HPP

#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frechet/error.hpp"

namespace frechet::detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

struct NumericTable {
    std::size_t columns = 0;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> header;
};

/// Reads comma-separated numeric rows. Blank lines and lines starting with
/// '#' are skipped. With `allow_header`, a first row that does not parse as
/// numbers is kept as column names. Every row must have the same width and
/// only finite values.
inline NumericTable read_numeric_table(std::istream& in, bool allow_header) {
    NumericTable table;
    std::string line;
    std::size_t line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#')
            continue;

        std::vector<std::string_view> fields;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = sv.find(',', pos);
            fields.push_back(sv.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }

        std::vector<double> row;
        bool numeric = true;
        for (auto f : fields) {
            auto v = parse_double(f);
            if (!v) {
                numeric = false;
                break;
            }
            row.push_back(*v);
        }

        if (!numeric) {
            if (allow_header && first) {
                for (auto f : fields)
                    table.header.emplace_back(trim(f));
                table.columns = fields.size();
                first = false;
                continue;
            }
            throw ParseError("line " + std::to_string(line_no) + ": not a numeric row");
        }
        for (double v : row)
            if (!std::isfinite(v))
                throw NonFiniteValue("line " + std::to_string(line_no) + ": non-finite value");
        if (table.columns == 0)
            table.columns = row.size();
        if (row.size() != table.columns)
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(table.columns) + " columns, got " +
                             std::to_string(row.size()));
        table.rows.push_back(std::move(row));
        first = false;
    }
    return table;
}

}  // namespace frechet::detail

#endif  // FRECHET_DETAIL_CSV_HPP
