#pragma once

// Generalized Raabe cosine transform
//   R_z(y, w) = Gamma(2z+1)/2 * int_0^inf [(t - iw)^{-(2z+1)} + (t + iw)^{-(2z+1)}] cos(yt) dt.

#include "ramanujan/numerics.hpp"
#include "ramanujan/result.hpp"

namespace ramanujan {

struct RaabeParams {
    cplx z;
    double y = 1.0;
    cplx w;

    // Re(w) > 0, y > 0, and Re(z) > 0 unless z is a nonnegative integer.
    void validate() const;
};

struct QuadValue {
    cplx value{};
    double error_estimate = 0.0;
    long cells = 0;
};

// Half-period cells t_k = (k + 1/2)pi/y, Gauss quadrature per cell, and repeated
// averaging of the alternating partial sums.
QuadValue raabe_direct(const RaabeParams& p, const PrecisionConfig& cfg = {});

// y^{2m} (-1)^m G_m(y w).
cplx raabe_closed_integer(int m, double y, cplx w, const PrecisionConfig& cfg = {});

// |w^{2z} R_z(y, w) - y^{2z} R_z(w, y)| / max(|w^{2z} R_z(y, w)|, abs_tol), for w > 0.
double raabe_symmetry_check(cplx z, double y, double w, const PrecisionConfig& cfg = {});

// -cos(pi z) w^{-2z} sum_{n=1}^{r} Gamma(2z+2n)/(yw)^{2n}. Throws TruncationError when
// the terms start growing before n = r. Exactly zero for half-integer z.
AsymptoticValue raabe_asymptotic(cplx z, double y, cplx w, int r);

// sum_{n>=1} R_z(2 pi n, w): quadrature for the first terms, asymptotic tail via
// Hurwitz zeta values.
SeriesValue raabe_sum(cplx z, cplx w, const PrecisionConfig& cfg = {});

// Gamma(2z+1)/4 * [zeta(1+2z, iw) + zeta(1+2z, -iw) - cos(pi z)/(z w^{2z}) + sin(pi z)/w^{2z+1}].
cplx raabe_sum_closed(cplx z, cplx w, const PrecisionConfig& cfg = {});

// Limit of raabe_sum_closed as z -> 0: (2 log w - psi(iw) - psi(-iw))/4.
cplx raabe_sum_closed_at_zero(cplx w);

// int_0^inf R_z(2 pi v, w) dv against -Gamma(2z+1) sin(pi z) / (4 w^{2z+1}).
IdentityCheckResult raabe_integral_check(cplx z, cplx w, const PrecisionConfig& cfg = {});

// sum_n int_0^inf t cos t/(t^2 + n^2 u^2) dt against
// (log(u/2pi) - (psi(iu/2pi) + psi(-iu/2pi))/2)/2.
IdentityCheckResult dgkm_identity(cplx u, const PrecisionConfig& cfg = {});

}  // namespace ramanujan
