#ifndef FRECHET_DIVERGENCE_DIVERGENCES_HPP
#define FRECHET_DIVERGENCE_DIVERGENCES_HPP

// Density- and kernel-based comparisons of finitely supported laws. Logs are
// natural; expectations are exact sums over the supports.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "frechet/divergence/discrete_law.hpp"
#include "frechet/error.hpp"

namespace frechet {

namespace detail {

/// Masses of two laws on the union of their supports: entry k holds
/// (p-mass, q-mass) of the k-th union point.
struct AlignedMasses {
    std::vector<double> p, q;
};

inline AlignedMasses align(const DiscreteLawD& p, const DiscreteLawD& q) {
    require_same_dimension(p, q);
    AlignedMasses m;
    m.p.assign(p.weights().begin(), p.weights().end());
    m.q.assign(p.size(), 0.0);
    for (std::size_t j = 0; j < q.size(); ++j) {
        std::size_t k = p.find(q.point(j));
        if (k < p.size()) {
            m.q[k] = q.weight(j);
        } else {
            m.p.push_back(0.0);
            m.q.push_back(q.weight(j));
        }
    }
    return m;
}

inline double euclidean(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k)
        s += (x[k] - y[k]) * (x[k] - y[k]);
    return std::sqrt(s);
}

inline double squared_euclidean(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k)
        s += (x[k] - y[k]) * (x[k] - y[k]);
    return s;
}

/// Sum in ascending order: the result depends only on the multiset of
/// terms, so swapping the two laws of a symmetric expression changes nothing.
inline double ordered_sum(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end());
    double s = 0.0;
    for (double t : terms)
        s += t;
    return s;
}

/// Sum over (i, j) of p_i q_j f(x_i, y_j).
template <typename F>
double pair_expectation(const DiscreteLawD& p, const DiscreteLawD& q, F&& f) {
    std::vector<double> terms;
    terms.reserve(p.size() * q.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            terms.push_back(p.weight(i) * q.weight(j) * f(p.point(i), q.point(j)));
    return ordered_sum(std::move(terms));
}

}  // namespace detail

/// Total variation: half the L1 distance of the mass functions, which equals
/// the largest discrepancy sup_A |p(A) - q(A)| over events.
inline double total_variation(const DiscreteLawD& p, const DiscreteLawD& q) {
    auto m = detail::align(p, q);
    double s = 0.0;
    for (std::size_t k = 0; k < m.p.size(); ++k)
        s += std::abs(m.p[k] - m.q[k]);
    return std::clamp(0.5 * s, 0.0, 1.0);
}

/// Kullback-Leibler divergence sum p log(p / q). Requires every p-atom to
/// carry q-mass.
inline double kl(const DiscreteLawD& p, const DiscreteLawD& q) {
    auto m = detail::align(p, q);
    double s = 0.0;
    for (std::size_t k = 0; k < m.p.size(); ++k) {
        if (m.p[k] == 0.0)
            continue;
        if (m.q[k] == 0.0)
            throw AbsoluteContinuityViolation("p has an atom where q has no mass");
        s += m.p[k] * std::log(m.p[k] / m.q[k]);
    }
    return std::max(0.0, s);
}

/// Jensen-Shannon divergence: mean KL of both laws to their midpoint
/// mixture. Always finite, at most ln 2.
inline double js(const DiscreteLawD& p, const DiscreteLawD& q) {
    auto m = detail::align(p, q);
    double s = 0.0;
    for (std::size_t k = 0; k < m.p.size(); ++k) {
        double eta = 0.5 * (m.p[k] + m.q[k]);
        if (m.p[k] > 0.0)
            s += 0.5 * m.p[k] * std::log(m.p[k] / eta);
        if (m.q[k] > 0.0)
            s += 0.5 * m.q[k] * std::log(m.q[k] / eta);
    }
    return std::clamp(s, 0.0, std::numbers::ln2);
}

/// Bhattacharyya coefficient sum sqrt(p q), in [0, 1].
inline double bhattacharyya_coeff(const DiscreteLawD& p, const DiscreteLawD& q) {
    auto m = detail::align(p, q);
    double s = 0.0;
    for (std::size_t k = 0; k < m.p.size(); ++k)
        s += std::sqrt(m.p[k] * m.q[k]);
    return std::clamp(s, 0.0, 1.0);
}

/// Hellinger distance sqrt(1 - BC), in [0, 1]. Evaluated as
/// sqrt(sum (sqrt p - sqrt q)^2 / 2), which is the same quantity for
/// probability vectors but does not turn the rounding of BC near 1 into a
/// 1e-8 distance between identical laws.
inline double hellinger(const DiscreteLawD& p, const DiscreteLawD& q) {
    auto m = detail::align(p, q);
    double s = 0.0;
    for (std::size_t k = 0; k < m.p.size(); ++k) {
        double d = std::sqrt(m.p[k]) - std::sqrt(m.q[k]);
        s += d * d;
    }
    return std::sqrt(std::clamp(0.5 * s, 0.0, 1.0));
}

/// Bhattacharyya distance -ln BC; +infinity for laws with disjoint supports.
inline double bhattacharyya_distance(const DiscreteLawD& p, const DiscreteLawD& q) {
    double bc = bhattacharyya_coeff(p, q);
    if (bc == 0.0)
        return std::numeric_limits<double>::infinity();
    return -std::log(bc);
}

/// Energy distance: the square root of
/// 2 E|X - Y| - E|X - X'| - E|Y - Y'|, clamped at 0.
inline double energy_distance(const DiscreteLawD& p, const DiscreteLawD& q) {
    require_same_dimension(p, q);
    double cross = detail::pair_expectation(p, q, detail::euclidean);
    double self = detail::pair_expectation(p, p, detail::euclidean) + detail::pair_expectation(q, q, detail::euclidean);
    return std::sqrt(std::max(0.0, 2.0 * cross - self));
}

/// Kernel for the mean-embedding discrepancy. Only the Gaussian kernel
/// exp(-|x - y|^2 / (2 sigma^2)) is provided.
struct KernelSpec {
    enum class Kind { gaussian };

    Kind kind = Kind::gaussian;
    double bandwidth = 1.0;

    static KernelSpec gaussian(double sigma) {
        if (!(sigma > 0.0) || !std::isfinite(sigma))
            throw InvalidArgument("kernel bandwidth must be positive and finite");
        return KernelSpec{Kind::gaussian, sigma};
    }

    double operator()(std::span<const double> x, std::span<const double> y) const {
        return std::exp(-detail::squared_euclidean(x, y) / (2.0 * bandwidth * bandwidth));
    }
};

/// Maximum mean discrepancy: the RKHS norm of the difference of the kernel
/// mean embeddings, clamped at 0 before the square root.
inline double mmd(const DiscreteLawD& p, const DiscreteLawD& q, const KernelSpec& k) {
    require_same_dimension(p, q);
    if (!(k.bandwidth > 0.0) || !std::isfinite(k.bandwidth))
        throw InvalidArgument("kernel bandwidth must be positive and finite");
    double self = detail::pair_expectation(p, p, k) + detail::pair_expectation(q, q, k);
    double cross = detail::pair_expectation(p, q, k);
    return std::sqrt(std::max(0.0, self - 2.0 * cross));
}

}  // namespace frechet

#endif  // FRECHET_DIVERGENCE_DIVERGENCES_HPP
