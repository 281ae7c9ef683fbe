#include "ramanujan/numerics.hpp"

namespace ramanujan {

namespace {

void require_right_half_plane(cplx w) {
    if (!(w.real() > 0.0)) throw DomainError("stable_G: requires Re(w) > 0");
}

cplx literal_formula(int m, cplx w) {
    ComplexSum s;
    s += std::sinh(w) * shi(w);
    s -= std::cosh(w) * chi(w);
    cplx p = 1.0;
    const cplx inv2 = 1.0 / (w * w);
    for (int j = 1; j <= m; ++j) {
        p *= inv2;
        s += factorial(2 * j - 1) * p;
    }
    return s.value();
}

// G_m(w) = w^{-2m} PV int_0^inf u^{2m+1} e^{-u} / (u^2 - w^2) du - (i pi / 2) sgn(Im w) e^{-w}.
// The integrand carries no cancellation, unlike sinh*Shi - cosh*Chi for large |w|.
cplx laplace_form(int m, cplx w, const PrecisionConfig& cfg) {
    const int p = 2 * m + 1;
    const double log_scale = std::lgamma(p + 1.0) - 2.0 * std::log(std::max(1.0, std::abs(w)));
    double upper = std::max(0.0, w.real()) + 10.0;
    while (p * std::log(upper) - upper > log_scale - 48.0) upper += 5.0;

    const cplx c = 0.5 * std::pow(w, 2 * m) * std::exp(-w);  // residue numerator h(w)
    auto h = [&](double u) { return std::pow(u, p) * std::exp(-u) / (u + w); };
    auto g = [&](double u) -> cplx {
        const cplx d = u - w;
        if (std::abs(d) < 1e-9 * std::abs(w)) {
            // derivative of h at u, the limit of the difference quotient
            return h(u) * (p / u - 1.0 - 1.0 / (u + w));
        }
        return (h(u) - c) / d;
    };

    const GaussRule& rule = gauss_legendre(cfg.quad_order);
    ComplexSum integral;
    const double centre = w.real();
    if (centre > 0.0 && centre < upper) {
        const double half = std::min(1.0, 0.5 * centre);
        integral += integrate_panels(g, 0.0, centre - half, 1.0, rule);
        integral += integrate_panels(g, centre - half, centre + half, half, rule);
        integral += integrate_panels(g, centre + half, upper, 1.0, rule);
    } else {
        integral += integrate_panels(g, 0.0, upper, 1.0, rule);
    }

    cplx log_term;
    if (w.imag() == 0.0)
        log_term = std::log((upper - w.real()) / w.real());
    else
        log_term = std::log(upper - w) - std::log(-w);
    integral += c * log_term;

    cplx result = integral.value() / std::pow(w, 2 * m);
    if (w.imag() != 0.0) result -= I * (0.5 * pi) * (w.imag() > 0 ? 1.0 : -1.0) * std::exp(-w);
    if (w.imag() == 0.0) result = result.real();
    return result;
}

}  // namespace

cplx stable_G_direct(int m, cplx w, const PrecisionConfig& cfg) {
    if (m < 0) throw DomainError("stable_G: m must be nonnegative");
    require_right_half_plane(w);
    if (std::abs(w) <= 2.0) return literal_formula(m, w);
    return laplace_form(m, w, cfg);
}

AsymptoticValue stable_G_asymptotic(int m, cplx w) {
    if (m < 0) throw DomainError("stable_G: m must be nonnegative");
    require_right_half_plane(w);
    // G_m(w) ~ -sum_{n>=1} (2m+2n-1)! / w^{2m+2n}
    const cplx inv2 = 1.0 / (w * w);
    cplx term = factorial(2 * m + 1) * std::pow(inv2, m + 1);
    ComplexSum s;
    int n = 1;
    double next_size = 0.0;
    for (;; ++n) {
        s -= term;
        const double k = 2.0 * m + 2.0 * n;
        const cplx next = term * (k * (k + 1.0)) * inv2;
        next_size = std::abs(next);
        if (next_size >= std::abs(term) || n >= 400) break;
        term = next;
    }
    AsymptoticValue out;
    out.value = w.imag() == 0.0 ? cplx(s.value().real(), 0.0) : s.value();
    out.error_estimate = next_size + 0.5 * pi * std::exp(-w.real());
    out.terms = n;
    return out;
}

cplx stable_G(int m, cplx w, const PrecisionConfig& cfg) {
    if (m < 0) throw DomainError("stable_G: m must be nonnegative");
    require_right_half_plane(w);
    if (std::abs(w) > g_switch) {
        const AsymptoticValue a = stable_G_asymptotic(m, w);
        if (a.error_estimate <= 1e-15 * std::abs(a.value)) return a.value;
    }
    return stable_G_direct(m, w, cfg);
}

}  // namespace ramanujan
