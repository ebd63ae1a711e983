#ifndef FRECHET_LAW_TRANSPORT_HPP
#define FRECHET_LAW_TRANSPORT_HPP

#include <algorithm>
#include <cmath>
#include <span>

#include "frechet/error.hpp"
#include "frechet/law/law1d.hpp"

namespace frechet {

/// Wasserstein-p distance on the line: the L^p distance between the two
/// quantile functions, integrated exactly over merged breakpoints.
inline double wasserstein_p(const Law1D& a, const Law1D& b, double p) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw InvalidArgument("wasserstein order must be finite and >= 1");
    double total = 0.0;
    for_each_quantile_piece(a, b, [&](double dt, double x, double y) {
        double d = std::abs(x - y);
        total += dt * (p == 1.0 ? d : p == 2.0 ? d * d : std::pow(d, p));
    });
    if (p == 1.0)
        return total;
    if (p == 2.0)
        return std::sqrt(total);
    return std::pow(total, 1.0 / p);
}

/// Sup-norm distance between the quantile functions.
inline double w_infinity(const Law1D& a, const Law1D& b) {
    double worst = 0.0;
    for_each_quantile_piece(a, b, [&](double, double x, double y) {
        worst = std::max(worst, std::abs(x - y));
    });
    return worst;
}

namespace detail {

/// Visits the union of the atoms of two laws in increasing order with the
/// values F(x), G(x) of both CDFs at each one.
template <typename Visit>
void for_each_union_atom(const Law1D& a, const Law1D& b, Visit&& visit) {
    std::size_t i = 0, j = 0;
    double f = 0.0, g = 0.0;
    while (i < a.size() || j < b.size()) {
        double x;
        if (j == b.size() || (i < a.size() && a.atoms()[i] < b.atoms()[j]))
            x = a.atoms()[i];
        else
            x = b.atoms()[j];
        if (i < a.size() && a.atoms()[i] == x)
            f = a.cumulative()[i++];
        if (j < b.size() && b.atoms()[j] == x)
            g = b.cumulative()[j++];
        visit(x, f, g);
    }
}

}  // namespace detail

/// Area between the two CDFs, integrated piecewise between union atoms.
inline double w1_cdf_area(const Law1D& a, const Law1D& b) {
    double area = 0.0;
    double prev_x = 0.0, prev_gap = 0.0;
    bool first = true;
    detail::for_each_union_atom(a, b, [&](double x, double f, double g) {
        if (!first)
            area += prev_gap * (x - prev_x);
        first = false;
        prev_x = x;
        prev_gap = std::abs(f - g);
    });
    return area;
}

/// Kolmogorov distance sup_x |F(x) - G(x)|. Both CDFs are step functions, so
/// the supremum is attained at the right-hand value of some union atom.
inline double kolmogorov(const Law1D& a, const Law1D& b) {
    double worst = 0.0;
    detail::for_each_union_atom(a, b, [&](double, double f, double g) {
        worst = std::max(worst, std::abs(f - g));
    });
    return worst;
}

/// Gini dissimilarity index ((1/n) sum |a_h - b_h|^alpha)^(1/alpha) of two
/// nondecreasing sequences of equal length.
inline double gini_index(std::span<const double> a, std::span<const double> b, double alpha) {
    if (a.size() != b.size())
        throw InvalidArgument("gini sequences differ in length");
    if (a.empty())
        throw EmptyInput("gini sequences are empty");
    if (!(alpha >= 1.0) || !std::isfinite(alpha))
        throw InvalidArgument("gini exponent must be finite and >= 1");
    if (!std::is_sorted(a.begin(), a.end()) || !std::is_sorted(b.begin(), b.end()))
        throw UnsortedInput("gini sequences must be nondecreasing");
    double total = 0.0;
    for (std::size_t h = 0; h < a.size(); ++h) {
        if (!std::isfinite(a[h]) || !std::isfinite(b[h]))
            throw NonFiniteValue("gini sequences must be finite");
        total += std::pow(std::abs(a[h] - b[h]), alpha);
    }
    return std::pow(total / static_cast<double>(a.size()), 1.0 / alpha);
}

}  // namespace frechet

#endif  // FRECHET_LAW_TRANSPORT_HPP
