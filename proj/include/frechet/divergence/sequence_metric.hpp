#ifndef FRECHET_DIVERGENCE_SEQUENCE_METRIC_HPP
#define FRECHET_DIVERGENCE_SEQUENCE_METRIC_HPP

#include <cmath>
#include <span>

#include "frechet/error.hpp"

namespace frechet {

/// Truncated sequence-space distance and a bound on what the truncation
/// leaves out.
struct SequenceMetricResult {
    double value = 0.0;            ///< sum over n <= p
    double remainder_bound = 0.0;  ///< sum over n > p of 1/n!
};

/// Distance between real sequences, sum over n >= 1 of
/// (1/n!) |x_n - y_n| / (1 + |x_n - y_n|), truncated after p terms. Every
/// omitted term is below 1/n!, so the full series lies in
/// [value, value + remainder_bound].
inline SequenceMetricResult sequence_metric(std::span<const double> x, std::span<const double> y, int p) {
    if (p < 1)
        throw InvalidArgument("truncation index must be at least 1");
    const auto count = static_cast<std::size_t>(p);
    if (x.size() < count || y.size() < count)
        throw InvalidArgument("sequences must be defined up to the truncation index");
    SequenceMetricResult r;
    double inv_factorial = 1.0;
    for (std::size_t n = 1; n <= count; ++n) {
        inv_factorial /= static_cast<double>(n);
        if (!std::isfinite(x[n - 1]) || !std::isfinite(y[n - 1]))
            throw NonFiniteValue("sequence terms must be finite");
        double d = std::abs(x[n - 1] - y[n - 1]);
        r.value += inv_factorial * (d / (1.0 + d));
    }
    // Tail summed directly rather than as e - partial sum, which cancels.
    for (double n = static_cast<double>(count) + 1.0;; n += 1.0) {
        inv_factorial /= n;
        if (inv_factorial == 0.0 || r.remainder_bound + inv_factorial == r.remainder_bound)
            break;
        r.remainder_bound += inv_factorial;
    }
    return r;
}

}  // namespace frechet

#endif  // FRECHET_DIVERGENCE_SEQUENCE_METRIC_HPP
