#ifndef FRECHET_LAW_FRECHET1957_HPP
#define FRECHET_LAW_FRECHET1957_HPP

#include <cmath>

#include "frechet/error.hpp"
#include "frechet/law/coupling.hpp"
#include "frechet/law/law1d.hpp"

namespace frechet {

/// Ingredients of the moment form of the quadratic law distance:
/// sqrt((a - a')^2 + sigma^2 - 2 sigma sigma' rho + sigma'^2), with rho the
/// largest correlation attainable by a coupling of the two laws.
struct Frechet1957Terms {
    double mean_a = 0.0;
    double mean_b = 0.0;
    double sigma_a = 0.0;
    double sigma_b = 0.0;
    double rho = 0.0;    ///< correlation of the monotone coupling; 0 if a deviation vanishes
    double value = 0.0;
};

inline Frechet1957Terms frechet_1957_terms(const Law1D& a, const Law1D& b) {
    auto ma = moments(a);
    auto mb = moments(b);
    Frechet1957Terms r{ma.mean, mb.mean, ma.deviation, mb.deviation, 0.0, 0.0};
    const double dm = ma.mean - mb.mean;
    double spread = (ma.deviation - mb.deviation) * (ma.deviation - mb.deviation);
    if (ma.deviation > 0.0 && mb.deviation > 0.0) {
        // sigma^2 - 2 sigma sigma' rho + sigma'^2
        //   = (sigma - sigma')^2 + 2 sigma sigma' (1 - rho),
        // and 1 - rho = E[(Z - T)^2] / 2 for reduced variables with unit
        // second moment. Evaluating it that way avoids cancellation when the
        // laws are close.
        auto c = monotone_coupling(a, b);
        double gap = 0.0;
        for (const auto& p : c.pairs()) {
            double z = (p.x - ma.mean) / ma.deviation;
            double t = (p.y - mb.mean) / mb.deviation;
            gap += p.w * (z - t) * (z - t);
        }
        r.rho = correlation(c);
        spread += ma.deviation * mb.deviation * gap;
    }
    r.value = std::sqrt(dm * dm + spread);
    return r;
}

/// Quadratic law distance from means, deviations and the maximal
/// correlation; coincides with wasserstein_p(a, b, 2).
inline double frechet_1957_distance(const Law1D& a, const Law1D& b) {
    return frechet_1957_terms(a, b).value;
}

/// Distance sqrt((a - a')^2 + (sigma - sigma')^2) for two laws whose reduced
/// forms (X - a) / sigma coincide. Two point masses qualify; anything else
/// whose reduced laws differ by more than 1e-9 is rejected.
inline double same_reduced_distance(const Law1D& a, const Law1D& b) {
    constexpr double tol = 1e-9;
    auto ma = moments(a);
    auto mb = moments(b);
    bool point_a = ma.deviation == 0.0, point_b = mb.deviation == 0.0;
    if (point_a != point_b)
        throw ReducedLawsDiffer("only one of the laws is a point mass");
    if (!point_a) {
        if (a.size() != b.size())
            throw ReducedLawsDiffer("reduced laws have different numbers of atoms");
        for (std::size_t k = 0; k < a.size(); ++k) {
            double za = (a.atoms()[k] - ma.mean) / ma.deviation;
            double zb = (b.atoms()[k] - mb.mean) / mb.deviation;
            if (std::abs(za - zb) > tol || std::abs(a.weights()[k] - b.weights()[k]) > tol)
                throw ReducedLawsDiffer("reduced laws differ");
        }
    }
    return std::hypot(ma.mean - mb.mean, ma.deviation - mb.deviation);
}

}  // namespace frechet

#endif  // FRECHET_LAW_FRECHET1957_HPP
