#include "ramanujan/detail.hpp"
#include "ramanujan/numerics.hpp"

#include <array>
#include <limits>

namespace ramanujan {

namespace {

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Lanczos approximation, g = 7, n = 9.
constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx gamma_right(cplx z) {
    z -= 1.0;
    cplx x = lanczos_coef[0];
    for (int i = 1; i < 9; ++i) x += lanczos_coef[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return std::exp(0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t) * x;
}

}  // namespace

cplx gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw DomainError("gamma: pole at a nonpositive integer");
    if (z.imag() == 0.0) return std::tgamma(z.real());
    if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma_right(1.0 - z));
    return gamma_right(z);
}

namespace detail {

cplx hurwitz_em(cplx s, cplx a, const PrecisionConfig& cfg) {
    const double need = 10.0 * std::abs(s.imag()) + 10.0 + std::abs(s);
    const long n_direct = std::max(0L, static_cast<long>(std::ceil(need - a.real())));
    ComplexSum sum;
    for (long n = 0; n < n_direct; ++n) sum += std::exp(-s * std::log(a + static_cast<double>(n)));
    const cplx x = a + static_cast<double>(n_direct);
    const cplx logx = std::log(x);
    const cplx x_ms = std::exp(-s * logx);
    sum += x * x_ms / (s - 1.0);
    sum += 0.5 * x_ms;
    // B_{2k}/(2k)! (s)_{2k-1} x^{-s-2k+1}
    cplx poch = s;
    cplx xpow = x_ms / x;
    const cplx inv_x2 = 1.0 / (x * x);
    double fact = 2.0;  // (2k)!
    for (int k = 1; 2 * k <= cfg.em_order; ++k) {
        sum += bernoulli_double(2 * k) / fact * poch * xpow;
        poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        xpow *= inv_x2;
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return sum.value();
}

}  // namespace detail

cplx riemann_zeta(cplx s, const PrecisionConfig& cfg) {
    if (s == cplx(1.0, 0.0)) throw DomainError("riemann_zeta: pole at s = 1");
    if (s.real() < 0.0) {
        if (s.imag() == 0.0 && std::fmod(s.real(), 2.0) == 0.0) return 0.0;  // trivial zeros
        const cplx r = std::pow(cplx(2.0), s) * std::pow(cplx(pi), s - 1.0) *
                       std::sin(0.5 * pi * s) * gamma(1.0 - s) * riemann_zeta(1.0 - s, cfg);
        return s.imag() == 0.0 ? cplx(r.real(), 0.0) : r;
    }
    const cplx r = detail::hurwitz_em(s, 1.0, cfg);
    return s.imag() == 0.0 ? cplx(r.real(), 0.0) : r;
}

cplx hurwitz_zeta(cplx s, cplx a, const PrecisionConfig& cfg) {
    if (!(s.real() > 1.0)) throw DomainError("hurwitz_zeta: requires Re(s) > 1");
    if (a.imag() == 0.0 && a.real() <= 0.0)
        throw DomainError("hurwitz_zeta: a must lie off the closed negative real axis");
    const cplx r = detail::hurwitz_em(s, a, cfg);
    return (s.imag() == 0.0 && a.imag() == 0.0) ? cplx(r.real(), 0.0) : r;
}

cplx digamma(cplx z) {
    if (is_nonpositive_integer(z)) throw DomainError("digamma: pole at a nonpositive integer");
    ComplexSum shift;
    while (z.real() < 10.0 || std::abs(z) < 10.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    // psi(z) ~ log z - 1/(2z) - sum B_{2k}/(2k z^{2k})
    cplx r = std::log(z) - 0.5 / z;
    const cplx inv2 = 1.0 / (z * z);
    cplx p = inv2;
    for (int k = 1; k <= 12; ++k) {
        r -= bernoulli_double(2 * k) / (2.0 * k) * p;
        p *= inv2;
    }
    return r - shift.value();
}

cplx expm1(cplx z) {
    const double x = z.real(), y = z.imag();
    if (y == 0.0) return std::expm1(x);
    const double s = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

namespace {

cplx shi_taylor(cplx z) {
    const cplx z2 = z * z;
    cplx p = z;  // z^{2n+1}/(2n+1)!
    ComplexSum s;
    for (int n = 0; n < 500; ++n) {
        const cplx term = p / (2.0 * n + 1.0);
        s += term;
        if (std::abs(term) <= 1e-18 * std::abs(s.value()) && n > 2) break;
        p *= z2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
    }
    return s.value();
}

// sum_{n>=1} z^{2n}/(2n (2n)!)
cplx chi_series(cplx z) {
    const cplx z2 = z * z;
    cplx p = 0.5 * z2;  // z^{2n}/(2n)!
    ComplexSum s;
    for (int n = 1; n < 500; ++n) {
        const cplx term = p / (2.0 * n);
        s += term;
        if (std::abs(term) <= 1e-18 * (std::abs(s.value()) + 1.0) && n > 2) break;
        p *= z2 / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
    }
    return s.value();
}

// E1(u) by the Lentz continued fraction; valid off the negative real axis, |u| >~ 2.
cplx e1_cf(cplx u) {
    constexpr double tiny = 1e-300;
    cplx b = u + 1.0;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i < 20000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const cplx del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) return h * std::exp(-u);
    }
    throw ConvergenceError("E1 continued fraction did not converge", h * std::exp(-u), 0.0);
}

// Taylor series lose about |z| - |Re z| nats to cancellation.
bool taylor_is_stable(cplx z) { return std::abs(z) <= 4.0 || std::abs(z) - std::abs(z.real()) <= 10.0; }

struct ShiChi {
    cplx shi, chi;
};

ShiChi shi_chi_via_e1(cplx z) {
    const cplx e1 = e1_cf(z);
    const cplx ei = -e1_cf(-z) + I * pi * (z.imag() > 0 ? 1.0 : -1.0);
    return {0.5 * (ei + e1), 0.5 * (ei - e1)};
}

}  // namespace

cplx shi(cplx z) {
    if (z == cplx(0.0)) return 0.0;
    if (taylor_is_stable(z)) return shi_taylor(z);
    return shi_chi_via_e1(z).shi;
}

cplx chi(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw DomainError("chi: argument on the closed negative real axis");
    if (taylor_is_stable(z)) return euler_gamma + std::log(z) + chi_series(z);
    return shi_chi_via_e1(z).chi;
}

}  // namespace ramanujan
