#ifndef FRECHET_LAW_COUPLING_HPP
#define FRECHET_LAW_COUPLING_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "frechet/error.hpp"
#include "frechet/law/law1d.hpp"

namespace frechet {

/// One atom (x, y) of a joint law together with its mass.
struct CouplingPair {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;

    friend bool operator==(const CouplingPair&, const CouplingPair&) = default;
};

/// Finitely supported joint law of (X, Y). Masses are positive and sum to
/// 1; sums within the renormalization tolerance are rescaled.
class Coupling1D {
public:
    explicit Coupling1D(std::vector<CouplingPair> pairs) : pairs_(std::move(pairs)) {
        if (pairs_.empty())
            throw EmptyInput("a coupling needs at least one pair");
        double total = 0.0;
        for (const auto& p : pairs_) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.w))
                throw NonFiniteValue("coupling entries must be finite");
            if (!(p.w > 0.0))
                throw InvalidWeights("coupling masses must be positive");
            total += p.w;
        }
        if (std::abs(total - 1.0) > weight_renormalize_tolerance)
            throw InvalidWeights("coupling masses sum to " + std::to_string(total));
        for (auto& p : pairs_)
            p.w /= total;
    }

    std::span<const CouplingPair> pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }

    Law1D marginal_x() const { return marginal(&CouplingPair::x); }
    Law1D marginal_y() const { return marginal(&CouplingPair::y); }

private:
    Law1D marginal(double CouplingPair::*field) const {
        std::vector<double> atoms, weights;
        for (const auto& p : pairs_) {
            atoms.push_back(p.*field);
            weights.push_back(p.w);
        }
        return Law1D(std::move(atoms), std::move(weights));
    }

    std::vector<CouplingPair> pairs_;
};

/// Joint CDF H(x, y) = P(X <= x, Y <= y).
inline double joint_cdf(const Coupling1D& c, double x, double y) {
    double h = 0.0;
    for (const auto& p : c.pairs())
        if (p.x <= x && p.y <= y)
            h += p.w;
    return h;
}

/// Pointwise extremes of all joint CDFs with marginal CDF values F and G.
struct HoeffdingBounds {
    double lower = 0.0;  ///< max(F + G - 1, 0)
    double upper = 0.0;  ///< min(F, G)
};

inline HoeffdingBounds frechet_hoeffding_bounds(double f, double g) {
    if (!(f >= 0.0 && f <= 1.0 && g >= 0.0 && g <= 1.0))
        throw InvalidArgument("CDF values must lie in [0,1]");
    return {std::max(f + g - 1.0, 0.0), std::min(f, g)};
}

inline HoeffdingBounds frechet_hoeffding_bounds(const Law1D& a, const Law1D& b, double x, double y) {
    return frechet_hoeffding_bounds(cdf(a, x), cdf(b, y));
}

/// Comonotone coupling (Q_a(U), Q_b(U)), built by sweeping the merged
/// cumulative breakpoints. Its joint CDF is the upper bound min(F, G).
inline Coupling1D monotone_coupling(const Law1D& a, const Law1D& b) {
    std::vector<CouplingPair> pairs;
    for_each_quantile_piece(a, b, [&](double dt, double x, double y) {
        pairs.push_back({x, y, dt});
    });
    return Coupling1D(std::move(pairs));
}

/// Countermonotone coupling (Q_a(U), Q_b(1 - U)); its joint CDF is the lower
/// bound max(F + G - 1, 0).
inline Coupling1D antimonotone_coupling(const Law1D& a, const Law1D& b) {
    std::vector<CouplingPair> pairs;
    for_each_quantile_piece(a, b.reflected(), [&](double dt, double x, double y) {
        pairs.push_back({x, -y, dt});
    });
    return Coupling1D(std::move(pairs));
}

/// Expected displacement cost E|X - Y|^alpha.
inline double coupling_cost(const Coupling1D& c, double alpha) {
    if (!(alpha >= 1.0) || !std::isfinite(alpha))
        throw InvalidArgument("cost exponent must be finite and >= 1");
    double total = 0.0;
    for (const auto& p : c.pairs())
        total += p.w * std::pow(std::abs(p.x - p.y), alpha);
    return total;
}

namespace detail {

struct CouplingMoments {
    double mean_x = 0.0, mean_y = 0.0, sd_x = 0.0, sd_y = 0.0;
};

inline CouplingMoments coupling_moments(const Coupling1D& c) {
    CouplingMoments m;
    for (const auto& p : c.pairs()) {
        m.mean_x += p.w * p.x;
        m.mean_y += p.w * p.y;
    }
    double vx = 0.0, vy = 0.0;
    for (const auto& p : c.pairs()) {
        vx += p.w * (p.x - m.mean_x) * (p.x - m.mean_x);
        vy += p.w * (p.y - m.mean_y) * (p.y - m.mean_y);
    }
    m.sd_x = std::sqrt(vx);
    m.sd_y = std::sqrt(vy);
    return m;
}

}  // namespace detail

/// Correlation coefficient E[Z T] of the reduced variables
/// Z = (X - a) / sigma, T = (Y - a') / sigma'.
inline double correlation(const Coupling1D& c) {
    auto m = detail::coupling_moments(c);
    if (m.sd_x == 0.0 || m.sd_y == 0.0)
        throw ZeroDeviation("correlation needs both marginals to have positive deviation");
    double r = 0.0;
    for (const auto& p : c.pairs())
        r += p.w * ((p.x - m.mean_x) / m.sd_x) * ((p.y - m.mean_y) / m.sd_y);
    return std::clamp(r, -1.0, 1.0);
}

/// Ky Fan type distance inf_eps [eps + P(|X - Y| > eps)]. The objective is
/// piecewise linear in eps with downward jumps at the values |x - y|, so the
/// infimum is a minimum over those values and 0.
inline double ky_fan_levy(const Coupling1D& c) {
    std::vector<double> gaps{0.0};
    for (const auto& p : c.pairs())
        gaps.push_back(std::abs(p.x - p.y));
    double best = std::numeric_limits<double>::infinity();
    for (double eps : gaps) {
        double tail = 0.0;
        for (const auto& p : c.pairs())
            if (std::abs(p.x - p.y) > eps)
                tail += p.w;
        best = std::min(best, eps + tail);
    }
    return best;
}

/// Monotone transport map lambda(x) = Q_b(F_a(x)) evaluated at an atom x
/// of `a`.
inline double monotone_map(const Law1D& a, const Law1D& b, double x) {
    auto atoms = a.atoms();
    auto it = std::lower_bound(atoms.begin(), atoms.end(), x);
    std::size_t k = static_cast<std::size_t>(it - atoms.begin());
    const double tol = 1e-12 * std::max(1.0, std::abs(x));
    // x may sit a rounding error above the atom it names.
    if (k == atoms.size() || std::abs(atoms[k] - x) > tol) {
        if (k == 0 || std::abs(atoms[k - 1] - x) > tol)
            throw NotAnAtom("monotone_map argument is not an atom of the source law");
        --k;
    }
    return quantile(b, a.cumulative()[k]);
}

}  // namespace frechet

#endif  // FRECHET_LAW_COUPLING_HPP
