#pragma once

// Lambert-type series and their alternative evaluation routes. Every summation
// returns a SeriesValue whose tail_bound certifies the neglected remainder.

#include "ramanujan/numerics.hpp"

namespace ramanujan {

struct LambertParams {
    cplx s;
    cplx y;
    double a = 0.0;

    // Re(y) > 0 and 0 <= a < 1.
    void validate() const;
};

// sigma_s(n) = sum_{d | n} d^s by trial division.
cplx divisor_sigma(cplx s, long n);

// The nonprincipal character mod 4: 1, 0, -1, 0 at n = 1, 2, 3, 0 (mod 4).
int chi4(long n);

// sum_{n>=1} (n-a)^{s-1} / (e^{(n-a)y} - 1)
SeriesValue lambert_shifted(const LambertParams& p, const PrecisionConfig& cfg = {});

// sum_{n>=1} n^{s-1} / (e^{ny} + 1)
SeriesValue lambert_alternating(cplx s, cplx y, const PrecisionConfig& cfg = {});

// sum_{n>=1} sigma_{2m}(n) e^{-ny}, summed in the form sum n^{2m}/(e^{ny} - 1)
SeriesValue lambert_sigma2m(int m, cplx y, const PrecisionConfig& cfg = {});

// sum_{n>=1} chi4(n) n^{2m-1} / (e^{n beta} - 1), m > 1
SeriesValue lambert_char4(int m, cplx beta, const PrecisionConfig& cfg = {});

// sum over odd n of n^{s-1} / (e^{n y} - 1)
SeriesValue lambert_odd(cplx s, cplx y, const PrecisionConfig& cfg = {});

// (1/2) sum_{n>=1} n^{s-1} [e^{i pi s/2}/(e^{n alpha - 2 pi i a} - 1) + e^{-i pi s/2}/(e^{n alpha + 2 pi i a} - 1)]
SeriesValue lambert_twisted(cplx s, cplx alpha, double a, const PrecisionConfig& cfg = {});

// Left side of the Lipschitz summation formula: sum_{n>=1} e^{2 pi i tau (n-a)} (n-a)^{s-1}.
SeriesValue lipschitz_lhs(double a, cplx s, cplx tau, const PrecisionConfig& cfg = {});

// Right side: Gamma(s)/(-2 pi i)^s sum_{k in Z} e^{2 pi i a k} (k+tau)^{-s}. Terms with
// |k| <= K are summed directly; the two tails are evaluated as periodic zeta tails.
SeriesValue lipschitz_rhs(double a, cplx s, cplx tau, long K, const PrecisionConfig& cfg = {});

// Gamma(s) zeta(s)/y^s + Gamma(s)/y^s sum_{k>=1} [e^{2 pi i a k} zeta(s, 1 - 2 pi i k/y)
// + e^{-2 pi i a k} zeta(s, 1 + 2 pi i k/y)]; at least K terms of the k-sum are summed
// directly, the remainder through the large-argument expansion of zeta(s, .).
SeriesValue lambert_via_hurwitz(const LambertParams& p, long K, const PrecisionConfig& cfg = {});

// sum_{k>=1} cos(pi s/2 + 2 pi a k)/k^s
cplx cosine_zeta(cplx s, double a, const PrecisionConfig& cfg = {});

}  // namespace ramanujan
