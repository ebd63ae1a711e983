#ifndef FRECHET_DETAIL_FORMAT_HPP
#define FRECHET_DETAIL_FORMAT_HPP

#include <charconv>
#include <cmath>
#include <string>

namespace frechet::detail {

// Locale-independent number formatting.

inline std::string format_fixed(double v, int decimals) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0.0)
        v = 0.0;  // drop the sign of -0
    char buf[512];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
    if (ec != std::errc{})
        return "nan";
    return std::string(buf, end);
}

inline std::string format_short(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0.0)
        v = 0.0;
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

}  // namespace frechet::detail

#endif  // FRECHET_DETAIL_FORMAT_HPP
