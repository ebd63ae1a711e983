#ifndef FRECHET_ORACLE_EXACT_OT_HPP
#define FRECHET_ORACLE_EXACT_OT_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "frechet/divergence/discrete_law.hpp"
#include "frechet/error.hpp"
#include "frechet/law/coupling.hpp"
#include "frechet/law/law1d.hpp"

namespace frechet {

/// Largest assignment size the brute-force oracle enumerates (8! = 40320
/// permutations).
inline constexpr std::size_t enumeration_cap = 8;

/// Default largest denominator tried when recovering rational weights.
inline constexpr std::size_t default_max_denominator = 8;

using CostMatrix = std::vector<std::vector<double>>;

/// Optimal permutation of an equal-weight assignment problem.
struct Assignment {
    double cost = 0.0;                    ///< (1/n) sum_i C[i][sigma(i)]
    std::vector<std::size_t> permutation; ///< sigma, row i -> column sigma[i]
};

/// Exact assignment by enumerating all n! permutations in lexicographic
/// order. Among permutations whose cost ties the minimum (to a relative
/// 1e-12) the lexicographically smallest is returned.
inline Assignment assignment_bruteforce(const CostMatrix& c) {
    const std::size_t n = c.size();
    if (n == 0)
        throw EmptyInput("empty cost matrix");
    if (n > enumeration_cap)
        throw EnumerationCapExceeded("assignment size " + std::to_string(n) + " exceeds the cap of " +
                                     std::to_string(enumeration_cap));
    for (const auto& row : c) {
        if (row.size() != n)
            throw InvalidArgument("cost matrix must be square");
        for (double x : row)
            if (!std::isfinite(x) || x < 0.0)
                throw InvalidArgument("costs must be finite and nonnegative");
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Assignment best{std::numeric_limits<double>::infinity(), perm};
    double minimum = best.cost;
    do {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            total += c[i][perm[i]];
        minimum = std::min(minimum, total);
        if (total < best.cost - 1e-12 * std::max(1.0, std::abs(best.cost)) || !std::isfinite(best.cost)) {
            best.cost = total;
            best.permutation = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    best.cost = minimum / static_cast<double>(n);
    return best;
}

/// Weights k_i / D with the smallest common denominator D.
struct RationalWeights {
    std::size_t denominator = 1;
    std::vector<std::size_t> counts;
};

inline RationalWeights rationalize_weights(std::span<const double> weights, std::size_t max_den) {
    constexpr double tol = 1e-9;
    if (weights.empty())
        throw EmptyInput("no weights to rationalize");
    for (std::size_t d = 1; d <= max_den; ++d) {
        RationalWeights r{d, {}};
        std::size_t total = 0;
        bool ok = true;
        for (double w : weights) {
            double scaled = w * static_cast<double>(d);
            double k = std::round(scaled);
            if (std::abs(scaled - k) > tol || k < 1.0) {
                ok = false;
                break;
            }
            r.counts.push_back(static_cast<std::size_t>(k));
            total += static_cast<std::size_t>(k);
        }
        if (ok && total == d)
            return r;
    }
    throw RationalizationFailure("weights are not multiples of 1/D for any D <= " + std::to_string(max_den));
}

namespace detail {

/// Atom index of each of the D equal-weight copies, with D the given
/// (common) denominator.
inline std::vector<std::size_t> split_atoms(std::span<const double> weights, std::size_t denominator) {
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        auto k = static_cast<std::size_t>(std::round(weights[i] * static_cast<double>(denominator)));
        owner.insert(owner.end(), k, i);
    }
    return owner;
}

/// Common denominator of two laws, checked against `max_den` and the
/// enumeration cap.
inline std::size_t common_denominator(std::span<const double> a, std::span<const double> b,
                                      std::size_t max_den) {
    auto ra = rationalize_weights(a, max_den);
    auto rb = rationalize_weights(b, max_den);
    std::size_t d = std::lcm(ra.denominator, rb.denominator);
    if (d > max_den)
        throw RationalizationFailure("common denominator " + std::to_string(d) + " exceeds " +
                                     std::to_string(max_den));
    if (d > enumeration_cap)
        throw EnumerationCapExceeded("common denominator " + std::to_string(d) + " exceeds the cap of " +
                                     std::to_string(enumeration_cap));
    return d;
}

}  // namespace detail

/// Equal-weight atom list: each atom repeated k_i times, D entries in total.
inline std::vector<double> rationalize(const Law1D& law, std::size_t max_den) {
    auto r = rationalize_weights(law.weights(), max_den);
    std::vector<double> out;
    for (std::size_t i : detail::split_atoms(law.weights(), r.denominator))
        out.push_back(law.atoms()[i]);
    return out;
}

inline std::vector<std::vector<double>> rationalize(const DiscreteLawD& law, std::size_t max_den) {
    auto r = rationalize_weights(law.weights(), max_den);
    std::vector<std::vector<double>> out;
    for (std::size_t i : detail::split_atoms(law.weights(), r.denominator))
        out.emplace_back(law.point(i).begin(), law.point(i).end());
    return out;
}

/// Coupling matrix between the atoms of a source and a target law.
struct TransportPlan {
    std::vector<std::vector<double>> mass;  ///< mass[i][j] moved from source atom i to target atom j
    std::vector<double> source;
    std::vector<double> target;

    /// Largest deviation of a row or column sum from its marginal.
    double marginal_error() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < source.size(); ++i)
            worst = std::max(worst, std::abs(std::accumulate(mass[i].begin(), mass[i].end(), 0.0) - source[i]));
        for (std::size_t j = 0; j < target.size(); ++j) {
            double col = 0.0;
            for (std::size_t i = 0; i < source.size(); ++i)
                col += mass[i][j];
            worst = std::max(worst, std::abs(col - target[j]));
        }
        return worst;
    }
};

struct ExactOtResult {
    double cost = 0.0;  ///< optimal value of E|X - Y|^p
    TransportPlan plan;
};

namespace detail {

template <typename Distance>
ExactOtResult exact_ot_split(std::span<const double> wa, std::span<const double> wb,
                             double p, std::size_t max_den, Distance&& dist) {
    if (!(p >= 1.0) || !std::isfinite(p))
        throw InvalidArgument("transport cost exponent must be finite and >= 1");
    std::size_t d = common_denominator(wa, wb, max_den);
    auto ia = split_atoms(wa, d);
    auto ib = split_atoms(wb, d);
    CostMatrix c(d, std::vector<double>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            c[i][j] = std::pow(dist(ia[i], ib[j]), p);
    auto best = assignment_bruteforce(c);

    ExactOtResult r;
    r.cost = best.cost;
    r.plan.source.assign(wa.begin(), wa.end());
    r.plan.target.assign(wb.begin(), wb.end());
    r.plan.mass.assign(wa.size(), std::vector<double>(wb.size(), 0.0));
    std::vector<std::vector<std::size_t>> counts(wa.size(), std::vector<std::size_t>(wb.size(), 0));
    for (std::size_t i = 0; i < d; ++i)
        ++counts[ia[i]][ib[best.permutation[i]]];
    for (std::size_t i = 0; i < wa.size(); ++i)
        for (std::size_t j = 0; j < wb.size(); ++j)
            r.plan.mass[i][j] = static_cast<double>(counts[i][j]) / static_cast<double>(d);
    return r;
}

}  // namespace detail

/// Exact Kantorovich optimum with cost |x - y|^p for laws whose weights are
/// multiples of 1/D, D <= 8: splitting atoms into D equal masses turns the
/// problem into an assignment, and some permutation is optimal.
inline ExactOtResult exact_ot(const Law1D& a, const Law1D& b, double p,
                              std::size_t max_den = default_max_denominator) {
    return detail::exact_ot_split(a.weights(), b.weights(), p, max_den,
                                  [&](std::size_t i, std::size_t j) { return std::abs(a.atoms()[i] - b.atoms()[j]); });
}

/// Same, with Euclidean ground distance in R^d.
inline ExactOtResult exact_ot(const DiscreteLawD& a, const DiscreteLawD& b, double p,
                              std::size_t max_den = default_max_denominator) {
    require_same_dimension(a, b);
    return detail::exact_ot_split(a.weights(), b.weights(), p, max_den,
                                  [&](std::size_t i, std::size_t j) {
                                      double s = 0.0;
                                      for (std::size_t k = 0; k < a.dim(); ++k) {
                                          double d = a.point(i)[k] - b.point(j)[k];
                                          s += d * d;
                                      }
                                      return std::sqrt(s);
                                  });
}

/// All couplings induced by permutations of the split atoms, aggregated and
/// deduplicated, in order of first appearance along the lexicographic
/// permutation sequence. These include every vertex of the transport
/// polytope.
inline std::vector<Coupling1D> vertex_couplings(const Law1D& a, const Law1D& b,
                                                std::size_t max_den = default_max_denominator) {
    std::size_t d = detail::common_denominator(a.weights(), b.weights(), max_den);
    auto ia = detail::split_atoms(a.weights(), d);
    auto ib = detail::split_atoms(b.weights(), d);
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<std::size_t>> seen;
    std::vector<Coupling1D> out;
    do {
        std::vector<std::size_t> counts(a.size() * b.size(), 0);
        for (std::size_t i = 0; i < d; ++i)
            ++counts[ia[i] * b.size() + ib[perm[i]]];
        if (!seen.insert(counts).second)
            continue;
        std::vector<CouplingPair> pairs;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                if (std::size_t k = counts[i * b.size() + j])
                    pairs.push_back({a.atoms()[i], b.atoms()[j], static_cast<double>(k) / static_cast<double>(d)});
        out.emplace_back(std::move(pairs));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace frechet

#endif  // FRECHET_ORACLE_EXACT_OT_HPP
