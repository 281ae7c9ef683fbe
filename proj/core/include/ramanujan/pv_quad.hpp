#pragma once

// Principal-value integrals over [0, inf) of F(x) cot(kappa x), where F decays like
// e^{-2 pi x} and the cot factor has a pole lattice x_k = k pi / kappa.

#include "ramanujan/numerics.hpp"

namespace ramanujan {

enum class PVKernel {
    RamanujanCot,  // F = x^{s-1}/(e^{2 pi x} - 1), cot(beta x/2)
    ShiftedCot,    // F = x^{s-1} (1/2i)[e^{i pi s/2}/(e^{2 pi x - 2 pi i a} - 1) - e^{-i pi s/2}/(e^{2 pi x + 2 pi i a} - 1)], cot(beta x/2)
    SechCot,       // F = x^{s-1} sech(2 pi x), cot(2 beta x)
};

const char* to_string(PVKernel k);

struct PVIntegralSpec {
    PVKernel kernel = PVKernel::RamanujanCot;
    cplx s;
    cplx beta;
    double a = 0.0;
    double window = 0.0;  // pole-cell half-width; 0 selects 0.3 times the pole gap

    // Re(beta) > 0, 0 <= a < 1, Re(s) > 2 for the cot kernels (Re(s) > 1 for SechCot),
    // and window below half the pole gap. Throws SpecError.
    void validate() const;
};

// The smooth factor F(x) of the integrand (everything except the cot factor).
cplx pv_kernel_eval(PVKernel kernel, cplx s, double a, double x);

// Scale kappa of the cot factor: beta/2 for the cot kernels, 2 beta for SechCot.
cplx pv_cot_scale(const PVIntegralSpec& spec);

struct PVResult {
    cplx value{};
    double tail_bound = 0.0;  // envelope bound on the part beyond the truncation point
    long cells = 0;           // Gauss panels integrated
    long poles = 0;           // pole cells folded
};

// For real beta each pole cell [x_k - h, x_k + h] is integrated as
// int_0^h [g(x_k + t) + g(x_k - t)] dt with g = F cot - (F(x_k)/kappa)/(x - x_k), whose
// subtracted part has zero principal value. For complex beta the poles leave the real
// axis and the integral is ordinary.
PVResult pv_integral(const PVIntegralSpec& spec, const PrecisionConfig& cfg = {});

}  // namespace ramanujan
