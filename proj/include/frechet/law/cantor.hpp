#ifndef FRECHET_LAW_CANTOR_HPP
#define FRECHET_LAW_CANTOR_HPP

#include <cmath>

#include "frechet/error.hpp"

namespace frechet {

/// Default truncation depth of the Cantor digit maps (double mantissa).
inline constexpr int cantor_default_digits = 52;

/// Cantor function evaluated through the ternary-to-binary digit map:
/// ternary digit 0 -> binary 0, 2 -> binary 1, and the first ternary 1
/// contributes a binary 1 and ends the expansion. Truncating after `digits`
/// places costs at most 2^-digits.
///
/// `Real` must carry enough precision for `digits` ternary places of x;
/// a double resolves about 33, so use a wider type for deeper expansions.
template <typename Real = double>
Real cantor_phi(Real x, int digits = cantor_default_digits) {
    using std::floor;
    if (digits < 1)
        throw InvalidArgument("cantor digits must be >= 1");
    if (!(x >= Real(0) && x <= Real(1)))
        throw InvalidArgument("cantor_phi argument must lie in [0,1]");
    if (x == Real(1))
        return Real(1);
    Real result(0);
    Real place(0.5);
    for (int k = 0; k < digits; ++k) {
        x *= 3;
        Real d = floor(x);
        if (d < Real(0))
            d = Real(0);
        if (d > Real(2))
            d = Real(2);
        x -= d;
        if (d == Real(1))
            return result + place;
        if (d == Real(2))
            result += place;
        place /= 2;
    }
    return result;
}

/// Quantile of the Cantor measure: the binary digits b of t, taken from the
/// non-terminating expansion so the result is left-continuous, become
/// ternary digits 2b.
template <typename Real = double>
Real cantor_quantile(Real t, int digits = cantor_default_digits) {
    if (digits < 1)
        throw InvalidArgument("cantor digits must be >= 1");
    if (!(t > Real(0) && t <= Real(1)))
        throw InvalidArgument("cantor_quantile level must lie in (0,1]");
    Real x(0);
    Real place(1);
    for (int k = 0; k < digits; ++k) {
        t *= 2;
        place /= 3;
        if (t > Real(1)) {
            t -= 1;
            x += 2 * place;
        }
    }
    return x;
}

}  // namespace frechet

#endif  // FRECHET_LAW_CANTOR_HPP
