#ifndef FRECHET_DIVERGENCE_SINKHORN_HPP
#define FRECHET_DIVERGENCE_SINKHORN_HPP

// Entropically regularized transport with squared Euclidean cost, solved by
// Sinkhorn fixed-point iterations on the dual potentials in the log domain.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "frechet/divergence/divergences.hpp"
#include "frechet/error.hpp"

namespace frechet {

struct SinkhornConfig {
    double epsilon = 1e-2;
    int max_iters = 1000000;
    /// Sup-norm change of the dual potentials (in cost units) at which the
    /// final stage stops.
    double stop_tol = 1e-9;

    void validate() const {
        if (!(epsilon > 0.0) || !std::isfinite(epsilon))
            throw InvalidArgument("epsilon must be positive and finite");
        if (max_iters < 1)
            throw InvalidArgument("max_iters must be positive");
        if (!(stop_tol > 0.0) || !std::isfinite(stop_tol))
            throw InvalidArgument("stop_tol must be positive and finite");
    }
};

struct SinkhornResult {
    double cost = 0.0;  ///< <pi, C> of the regularized plan
    std::vector<std::vector<double>> plan;
    int iterations = 0;
};

namespace detail {

inline double log_sum_exp(const std::vector<double>& v) {
    double top = *std::max_element(v.begin(), v.end());
    if (top == -std::numeric_limits<double>::infinity())
        return top;
    double s = 0.0;
    for (double x : v)
        s += std::exp(x - top);
    return top + std::log(s);
}

/// Iterations per intermediate stage of the epsilon schedule.
inline constexpr int sinkhorn_stage_iters = 50;

}  // namespace detail

/// Regularized transport plan between p and q for cost |x - y|^2.
/// Epsilon is annealed geometrically from the cost scale down to
/// cfg.epsilon; the last stage iterates until the potentials move by at
/// most cfg.stop_tol, or throws NonConvergence after cfg.max_iters.
inline SinkhornResult sinkhorn(const DiscreteLawD& p, const DiscreteLawD& q, const SinkhornConfig& cfg) {
    cfg.validate();
    require_same_dimension(p, q);
    const std::size_t n = p.size(), m = q.size();
    std::vector<std::vector<double>> c(n, std::vector<double>(m));
    double cmax = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            c[i][j] = detail::squared_euclidean(p.point(i), q.point(j));
            cmax = std::max(cmax, c[i][j]);
        }
    std::vector<double> log_a(n), log_b(m);
    for (std::size_t i = 0; i < n; ++i)
        log_a[i] = std::log(p.weight(i));
    for (std::size_t j = 0; j < m; ++j)
        log_b[j] = std::log(q.weight(j));

    // A law against itself has equal potentials on both sides; the averaged
    // symmetric update keeps them equal and avoids the slowly mixing
    // (f + c, g - c) directions of the alternating scheme.
    const bool self = p == q;
    std::vector<double> f(n, 0.0), g(m, 0.0), row(m), col(n);
    auto sweep = [&](double eps) {
        double change = 0.0;
        if (self) {
            std::vector<double> next(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < m; ++j)
                    row[j] = (f[j] - c[i][j]) / eps + log_b[j];
                next[i] = 0.5 * (f[i] - eps * detail::log_sum_exp(row));
            }
            for (std::size_t i = 0; i < n; ++i)
                change = std::max(change, std::abs(next[i] - f[i]));
            f = g = next;
            return change;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                row[j] = (g[j] - c[i][j]) / eps + log_b[j];
            double next = -eps * detail::log_sum_exp(row);
            change = std::max(change, std::abs(next - f[i]));
            f[i] = next;
        }
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t i = 0; i < n; ++i)
                col[i] = (f[i] - c[i][j]) / eps + log_a[i];
            double next = -eps * detail::log_sum_exp(col);
            change = std::max(change, std::abs(next - g[j]));
            g[j] = next;
        }
        return change;
    };

    SinkhornResult result;
    for (double eps = std::max(cmax, cfg.epsilon); eps > cfg.epsilon; eps *= 0.5)
        for (int k = 0; k < detail::sinkhorn_stage_iters; ++k)
            sweep(eps);
    for (;;) {
        ++result.iterations;
        double change = sweep(cfg.epsilon);
        if (change <= cfg.stop_tol)
            break;
        if (result.iterations >= cfg.max_iters)
            throw NonConvergence("Sinkhorn did not converge in " + std::to_string(cfg.max_iters) +
                                 " iterations (last potential change " + std::to_string(change) + ")");
    }

    result.plan.assign(n, std::vector<double>(m));
    std::vector<double> terms;
    terms.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            double pi = std::exp((f[i] + g[j] - c[i][j]) / cfg.epsilon + log_a[i] + log_b[j]);
            result.plan[i][j] = pi;
            terms.push_back(pi * c[i][j]);
        }
    result.cost = detail::ordered_sum(std::move(terms));
    return result;
}

/// Transport cost <pi_eps, |x - y|^2> of the regularized optimal plan.
inline double entropic_ot(const DiscreteLawD& p, const DiscreteLawD& q, const SinkhornConfig& cfg) {
    return sinkhorn(p, q, cfg).cost;
}

/// Debiased divergence W_eps(p, q) - W_eps(p, p) / 2 - W_eps(q, q) / 2.
/// The cross term averages both solve orders, so the result is exactly
/// symmetric in p and q and exactly 0 for p = q.
inline double sinkhorn_divergence(const DiscreteLawD& p, const DiscreteLawD& q, const SinkhornConfig& cfg) {
    double self = 0.5 * entropic_ot(p, p, cfg) + 0.5 * entropic_ot(q, q, cfg);
    double cross = p == q ? entropic_ot(p, p, cfg) : 0.5 * (entropic_ot(p, q, cfg) + entropic_ot(q, p, cfg));
    return cross - self;
}

}  // namespace frechet

#endif  // FRECHET_DIVERGENCE_SINKHORN_HPP
