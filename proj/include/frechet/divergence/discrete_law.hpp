#ifndef FRECHET_DIVERGENCE_DISCRETE_LAW_HPP
#define FRECHET_DIVERGENCE_DISCRETE_LAW_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "frechet/error.hpp"
#include "frechet/law/law1d.hpp"

namespace frechet {

/// Finitely supported probability law on R^d. Support points are stored
/// row-major and are pairwise distinct; weights are positive and sum to 1.
/// The constructor merges repeated points and drops zero weights.
class DiscreteLawD {
public:
    DiscreteLawD(const std::vector<std::vector<double>>& support, std::vector<double> weights) {
        if (support.size() != weights.size())
            throw InvalidWeights("support and weights differ in length");
        if (support.empty())
            throw EmptyInput("a law needs at least one support point");
        dim_ = support.front().size();
        if (dim_ == 0)
            throw EmptyInput("support points need at least one coordinate");
        double total = 0.0;
        for (std::size_t i = 0; i < support.size(); ++i) {
            if (support[i].size() != dim_)
                throw DimensionMismatch("support points differ in dimension");
            for (double x : support[i])
                if (!std::isfinite(x))
                    throw NonFiniteValue("support coordinates must be finite");
            if (!std::isfinite(weights[i]))
                throw NonFiniteValue("weights must be finite");
            if (weights[i] < 0.0)
                throw InvalidWeights("negative weight");
            if (weights[i] == 0.0)
                continue;
            total += weights[i];
            std::size_t k = find(support[i]);
            if (k < size()) {
                weights_[k] += weights[i];
            } else {
                flat_.insert(flat_.end(), support[i].begin(), support[i].end());
                weights_.push_back(weights[i]);
            }
        }
        if (weights_.empty())
            throw InvalidWeights("all weights are zero");
        if (std::abs(total - 1.0) > weight_renormalize_tolerance)
            throw InvalidWeights("weights sum to " + std::to_string(total));
        for (auto& w : weights_)
            w /= total;
    }

    /// Embeds a law on the line as a one-dimensional law.
    explicit DiscreteLawD(const Law1D& law) : dim_(1) {
        flat_.assign(law.atoms().begin(), law.atoms().end());
        weights_.assign(law.weights().begin(), law.weights().end());
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return weights_.size(); }
    std::span<const double> point(std::size_t i) const { return {flat_.data() + i * dim_, dim_}; }
    double weight(std::size_t i) const { return weights_.at(i); }
    std::span<const double> weights() const noexcept { return weights_; }

    /// Index of `x` in the support, or size() if absent.
    std::size_t find(std::span<const double> x) const {
        for (std::size_t k = 0; k < size(); ++k)
            if (std::equal(x.begin(), x.end(), point(k).begin(), point(k).end()))
                return k;
        return size();
    }

    friend bool operator==(const DiscreteLawD&, const DiscreteLawD&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> flat_;
    std::vector<double> weights_;
};

inline void require_same_dimension(const DiscreteLawD& p, const DiscreteLawD& q) {
    if (p.dim() != q.dim())
        throw DimensionMismatch("laws live in different dimensions");
}

}  // namespace frechet

#endif  // FRECHET_DIVERGENCE_DISCRETE_LAW_HPP
