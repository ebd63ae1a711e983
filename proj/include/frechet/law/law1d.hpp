#ifndef FRECHET_LAW_LAW1D_HPP
#define FRECHET_LAW_LAW1D_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "frechet/error.hpp"

namespace frechet {

/// Weight sums within this distance of 1 are renormalized; anything further
/// off is rejected.
inline constexpr double weight_renormalize_tolerance = 1e-9;

/// Cumulative weights closer than this are treated as one breakpoint.
inline constexpr double breakpoint_tolerance = 1e-12;

/// Finitely supported probability law on the real line.
///
/// Atoms are kept strictly increasing with positive weights; the
/// constructor sorts its input, merges repeated atoms and drops zero
/// weights. `cumulative()[k]` is the mass of the first k+1 atoms, with the
/// last entry exactly 1.
class Law1D {
public:
    Law1D(std::vector<double> atoms, std::vector<double> weights) {
        if (atoms.size() != weights.size())
            throw InvalidWeights("atoms and weights differ in length");
        if (atoms.empty())
            throw EmptyInput("a law needs at least one atom");
        std::vector<std::size_t> order(atoms.size());
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (!std::isfinite(atoms[i]) || !std::isfinite(weights[i]))
                throw NonFiniteValue("law atoms and weights must be finite");
            if (weights[i] < 0.0)
                throw InvalidWeights("negative weight");
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });
        double total = 0.0;
        for (std::size_t k : order) {
            if (weights[k] == 0.0)
                continue;
            total += weights[k];
            if (!atoms_.empty() && atoms_.back() == atoms[k]) {
                weights_.back() += weights[k];
            } else {
                atoms_.push_back(atoms[k]);
                weights_.push_back(weights[k]);
            }
        }
        if (atoms_.empty())
            throw InvalidWeights("all weights are zero");
        if (std::abs(total - 1.0) > weight_renormalize_tolerance)
            throw InvalidWeights("weights sum to " + std::to_string(total));
        for (auto& w : weights_)
            w /= total;
        cumulative_.resize(weights_.size());
        std::partial_sum(weights_.begin(), weights_.end(), cumulative_.begin());
        cumulative_.back() = 1.0;
    }

    static Law1D point_mass(double x) { return Law1D({x}, {1.0}); }

    /// Equal weights on the given (distinct or repeated) values.
    static Law1D uniform(std::vector<double> atoms) {
        std::vector<double> w(atoms.size(), atoms.empty() ? 0.0 : 1.0 / static_cast<double>(atoms.size()));
        return Law1D(std::move(atoms), std::move(w));
    }

    std::size_t size() const noexcept { return atoms_.size(); }
    std::span<const double> atoms() const noexcept { return atoms_; }
    std::span<const double> weights() const noexcept { return weights_; }
    std::span<const double> cumulative() const noexcept { return cumulative_; }

    /// Law of -X.
    Law1D reflected() const {
        std::vector<double> a(atoms_.rbegin(), atoms_.rend());
        for (auto& x : a)
            x = -x;
        return Law1D(std::move(a), std::vector<double>(weights_.rbegin(), weights_.rend()));
    }

    friend bool operator==(const Law1D&, const Law1D&) = default;

private:
    std::vector<double> atoms_;
    std::vector<double> weights_;
    std::vector<double> cumulative_;
};

/// Empirical law: equal weight per sample, repeated values merged.
inline Law1D from_samples(std::span<const double> values) {
    if (values.empty())
        throw EmptyInput("no samples");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> atoms, weights;
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        atoms.push_back(sorted[i]);
        weights.push_back(static_cast<double>(j - i) / n);
        i = j;
    }
    return Law1D(std::move(atoms), std::move(weights));
}

/// P(X <= x), right-continuous.
inline double cdf(const Law1D& law, double x) {
    auto atoms = law.atoms();
    auto it = std::upper_bound(atoms.begin(), atoms.end(), x);
    if (it == atoms.begin())
        return 0.0;
    return law.cumulative()[static_cast<std::size_t>(it - atoms.begin()) - 1];
}

/// Left-continuous generalized inverse inf{x : F(x) >= t} for t in (0,1].
inline double quantile(const Law1D& law, double t) {
    if (!(t > 0.0 && t <= 1.0))
        throw InvalidArgument("quantile level must lie in (0,1]");
    auto cum = law.cumulative();
    auto it = std::lower_bound(cum.begin(), cum.end(), t - breakpoint_tolerance);
    std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(it - cum.begin()), law.size() - 1);
    return law.atoms()[k];
}

/// Mean and quadratic mean deviation (population standard deviation).
struct Moments {
    double mean = 0.0;
    double deviation = 0.0;
};

inline Moments moments(const Law1D& law) {
    double mean = 0.0;
    for (std::size_t i = 0; i < law.size(); ++i)
        mean += law.weights()[i] * law.atoms()[i];
    double var = 0.0;
    for (std::size_t i = 0; i < law.size(); ++i) {
        double d = law.atoms()[i] - mean;
        var += law.weights()[i] * d * d;
    }
    return {mean, std::sqrt(var)};
}

/// Sweeps the merged cumulative breakpoints of two laws. On each level
/// interval of positive length dt both quantile functions are constant;
/// `piece(dt, x, y)` receives that length and the two quantile values.
template <typename Piece>
void for_each_quantile_piece(const Law1D& a, const Law1D& b, Piece&& piece) {
    auto ca = a.cumulative();
    auto cb = b.cumulative();
    std::size_t i = 0, j = 0;
    double prev = 0.0;
    while (i < a.size() && j < b.size()) {
        double next;
        bool step_a = false, step_b = false;
        if (std::abs(ca[i] - cb[j]) <= breakpoint_tolerance) {
            next = std::max(ca[i], cb[j]);
            step_a = step_b = true;
        } else if (ca[i] < cb[j]) {
            next = ca[i];
            step_a = true;
        } else {
            next = cb[j];
            step_b = true;
        }
        if (next > prev)
            piece(next - prev, a.atoms()[i], b.atoms()[j]);
        prev = std::max(prev, next);
        i += step_a;
        j += step_b;
    }
}

}  // namespace frechet

#endif  // FRECHET_LAW_LAW1D_HPP
