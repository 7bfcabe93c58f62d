#ifndef MIMHD_MEANS_HPP
#define MIMHD_MEANS_HPP

#include <cmath>

#include "mimhd/errors.hpp"

namespace mimhd {

template <typename Scalar>
inline Scalar avg(Scalar a, Scalar b) {
    return Scalar(0.5) * (a + b);
}

template <typename Scalar>
inline Scalar jump(Scalar left, Scalar right) {
    return right - left;
}

/// Logarithmic mean (b - a)/(ln b - ln a). Near a == b the quotient is replaced by
/// its series in xi^2, xi = (a - b)/(a + b).
template <typename Scalar>
inline Scalar ln_mean(Scalar a, Scalar b) {
    using std::log;
    if (!(a > 0) || !(b > 0)) throw NonPositiveArgument("ln_mean needs positive arguments");
    const Scalar xi2 = (a * (a - 2 * b) + b * b) / (a * (a + 2 * b) + b * b);
    if (xi2 < 1e-4)
        return (a + b) / (2 + xi2 * (Scalar(2) / 3 + xi2 * (Scalar(2) / 5 + xi2 * (Scalar(2) / 7))));
    return (b - a) / log(b / a);
}

} // namespace mimhd

#endif
