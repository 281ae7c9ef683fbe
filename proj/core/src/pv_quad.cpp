#include "ramanujan/pv_quad.hpp"

#include "ramanujan/detail.hpp"

namespace ramanujan {

const char* to_string(PVKernel k) {
    switch (k) {
        case PVKernel::RamanujanCot: return "RamanujanCot";
        case PVKernel::ShiftedCot: return "ShiftedCot";
        case PVKernel::SechCot: return "SechCot";
    }
    return "?";
}

namespace {

// Exponent e with integrand ~ x^e as x -> 0, counting the cot pole at the origin.
cplx leading_exponent(const PVIntegralSpec& spec) {
    if (spec.kernel == PVKernel::SechCot) return spec.s - 2.0;
    if (spec.kernel == PVKernel::ShiftedCot && spec.a != 0.0) return spec.s - 2.0;
    return spec.s - 3.0;
}

cplx real_power(double x, cplx e) {
    if (e.imag() == 0.0) return std::pow(x, e.real());
    return std::exp(e * std::log(x));
}

// 1/(e^u - 1) for Re(u) > 0
cplx inv_expm1(cplx u) {
    if (u.real() > 1.0) {
        const cplx e = std::exp(-u);
        return e / (1.0 - e);
    }
    return 1.0 / expm1(u);
}

cplx cot(cplx z) {
    if (z.imag() == 0.0) return 1.0 / std::tan(z.real());
    if (z.imag() > 0.0) {
        const cplx e = std::exp(2.0 * I * z);
        return I * (e + 1.0) / (e - 1.0);
    }
    const cplx e = std::exp(-2.0 * I * z);
    return I * (1.0 + e) / (1.0 - e);
}

}  // namespace

void PVIntegralSpec::validate() const {
    if (!(beta.real() > 0.0)) throw SpecError("pv_integral: requires Re(beta) > 0");
    if (!(a >= 0.0 && a < 1.0)) throw SpecError("pv_integral: requires 0 <= a < 1");
    const double need = leading_exponent(*this).real() + 1.0;
    if (!(need > 0.0)) {
        throw SpecError(kernel == PVKernel::SechCot || a != 0.0
                            ? "pv_integral: requires Re(s) > 1"
                            : "pv_integral: requires Re(s) > 2");
    }
    if (window < 0.0) throw SpecError("pv_integral: window must be positive");
    if (beta.imag() == 0.0 && window > 0.0) {
        const double gap = pi / pv_cot_scale(*this).real();
        if (window >= 0.5 * gap)
            throw SpecError("pv_integral: window must be below half the pole gap, or the first cell reaches x = 0");
    }
}

cplx pv_cot_scale(const PVIntegralSpec& spec) {
    return spec.kernel == PVKernel::SechCot ? 2.0 * spec.beta : 0.5 * spec.beta;
}

cplx pv_kernel_eval(PVKernel kernel, cplx s, double a, double x) {
    if (!(x > 0.0)) throw DomainError("pv_kernel_eval: requires x > 0");
    const cplx xs = real_power(x, s - 1.0);
    const double two_pi_x = 2.0 * pi * x;
    switch (kernel) {
        case PVKernel::RamanujanCot: return xs / std::expm1(two_pi_x);
        case PVKernel::SechCot: {
            const double e = std::exp(-two_pi_x);
            return xs * (2.0 * e / (1.0 + e * e));
        }
        case PVKernel::ShiftedCot: {
            // a = 0 and a = 1/2 collapse to real closed forms with exact zeros at even s
            if (a == 0.0) return detail::sin_pi(0.5 * s) * xs / std::expm1(two_pi_x);
            if (a == 0.5) {
                const double e = std::exp(-two_pi_x);
                return -detail::sin_pi(0.5 * s) * xs * (e / (1.0 + e));
            }
            const cplx up = std::exp(0.5 * pi * I * s);
            const cplx down = std::exp(-0.5 * pi * I * s);
            const cplx shift = 2.0 * pi * I * a;
            return xs * (up * inv_expm1(two_pi_x - shift) - down * inv_expm1(two_pi_x + shift)) / (2.0 * I);
        }
    }
    throw DomainError("pv_kernel_eval: unknown kernel");
}

PVResult pv_integral(const PVIntegralSpec& spec, const PrecisionConfig& cfg) {
    spec.validate();
    const cplx kappa = pv_cot_scale(spec);
    const GaussRule& rule = gauss_legendre(cfg.quad_order);
    auto F = [&](double x) { return pv_kernel_eval(spec.kernel, spec.s, spec.a, x); };
    auto f = [&](double x) { return F(x) * cot(kappa * x); };
    constexpr double max_width = 0.2;  // against the singularities of F at distance >= 1/4 from the axis

    // truncation point from the envelope |F(x)| <= C x^{Re(s)-1} e^{-2 pi x}
    const double sigma = spec.s.real();
    const double c_env = 2.0 * std::max(1.0, std::exp(0.5 * pi * std::abs(spec.s.imag())));
    auto envelope = [&](double x) { return c_env * std::pow(x, sigma - 1.0) * std::exp(-2.0 * pi * x); };
    double x_end = 1.0;
    while (envelope(x_end) > 1e-3 * cfg.abs_tol) x_end += 0.25;

    PVResult out;
    ComplexSum total;
    auto add_panels = [&](auto&& g, double lo, double hi, double width) {
        if (hi <= lo) return;
        const long n = std::max<long>(1, static_cast<long>(std::ceil((hi - lo) / width)));
        total += integrate_panels(g, lo, hi, width, rule);
        out.cells += n;
    };

    const bool real_beta = spec.beta.imag() == 0.0;
    const double gap = real_beta ? pi / kappa.real() : 0.0;
    const double h = real_beta ? (spec.window > 0.0 ? spec.window : 0.3 * gap) : 0.0;

    // geometric panels towards the integrable x^e singularity at the origin, plus the
    // analytic contribution of [0, eps] from the leading power
    const double start = real_beta ? std::min(0.5, gap - h) : 0.5;
    double right = start;
    constexpr int grading_levels = 50;
    for (int j = 0; j < grading_levels; ++j) {
        total += integrate_panel(f, 0.5 * right, right, rule);
        ++out.cells;
        right *= 0.5;
    }
    total += f(right) * right / (leading_exponent(spec) + 1.0);

    if (!real_beta) {
        // poles k pi / kappa sit off the axis; keep panels small against the nearest one
        const double dist = std::abs(pi * (1.0 / kappa).imag());
        add_panels(f, start, x_end, std::max(1e-3, std::min(max_width, 0.5 * dist)));
        out.value = total.value();
        out.tail_bound = envelope(x_end) / (2.0 * pi);
        return out;
    }

    const double k_real = kappa.real();
    add_panels(f, start, gap - h, max_width);
    const long poles = static_cast<long>(std::floor(x_end / gap)) + 1;
    for (long k = 1; k <= poles; ++k) {
        const double xk = k * gap;
        // g(x_k + t) + g(x_k - t) with cot(kappa (x_k +- t)) = +-cot(kappa t); the
        // subtracted terms +-(F(x_k)/kappa)/t cancel identically and are left out
        auto folded = [&](double t) { return (F(xk + t) - F(xk - t)) / std::tan(k_real * t); };
        add_panels(folded, 0.0, h, max_width);
        ++out.poles;
        const double next = k < poles ? (k + 1) * gap - h : xk + 0.5 * gap;
        add_panels(f, xk + h, next, max_width);
    }
    out.value = total.value();
    out.tail_bound = envelope(poles * gap + 0.5 * gap) / (2.0 * pi);
    return out;
}

}  // namespace ramanujan
