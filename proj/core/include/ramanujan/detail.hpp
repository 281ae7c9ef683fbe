#pragma once

// Internal helpers shared between translation units; not part of the stable API.

#include "ramanujan/numerics.hpp"

namespace ramanujan::detail {

// Euler-Maclaurin evaluation of sum_{n>=0} (n+a)^{-s} without domain checks;
// analytic in s != 1, used for riemann_zeta on the whole half-plane Re(s) >= 0.
cplx hurwitz_em(cplx s, cplx a, const PrecisionConfig& cfg);

inline cplx cpow(cplx base, cplx e) { return std::exp(e * std::log(base)); }

inline bool is_integer(cplx z) {
    return z.imag() == 0.0 && z.real() == std::floor(z.real());
}

inline bool is_half_integer(cplx z) {
    return z.imag() == 0.0 && (z.real() - 0.5) == std::floor(z.real() - 0.5);
}

// cos(pi z) with exact zeros at half-integers.
inline cplx cos_pi(cplx z) {
    if (is_half_integer(z)) return 0.0;
    if (is_integer(z)) return std::fmod(std::abs(z.real()), 2.0) == 0.0 ? 1.0 : -1.0;
    return std::cos(pi * z);
}

// sin(pi z) with exact zeros at integers.
inline cplx sin_pi(cplx z) {
    if (is_integer(z)) return 0.0;
    if (is_half_integer(z)) return std::fmod(std::abs(z.real() - 0.5), 2.0) == 0.0 ? 1.0 : -1.0;
    return std::sin(pi * z);
}

}  // namespace ramanujan::detail
