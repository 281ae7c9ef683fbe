#include "ramanujan/lambert.hpp"

#include "ramanujan/detail.hpp"

#include <limits>

namespace ramanujan {

using detail::cpow;

void LambertParams::validate() const {
    if (!(y.real() > 0.0)) throw DomainError("lambert: requires Re(y) > 0");
    if (!(a >= 0.0 && a < 1.0)) throw DomainError("lambert: requires 0 <= a < 1");
}

cplx divisor_sigma(cplx s, long n) {
    if (n < 1) throw DomainError("divisor_sigma: n must be positive");
    auto power = [&](long d) -> cplx {
        if (s.imag() == 0.0) return std::pow(static_cast<double>(d), s.real());
        return std::exp(s * std::log(static_cast<double>(d)));
    };
    ComplexSum sum;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += power(d);
        if (d * d != n) sum += power(n / d);
    }
    return sum.value();
}

int chi4(long n) {
    switch (((n % 4) + 4) % 4) {
        case 1: return 1;
        case 3: return -1;
        default: return 0;
    }
}

namespace {

// 1/(e^u - 1) without overflow or cancellation.
cplx inv_expm1(cplx u) {
    if (u.real() > 1.0) {
        const cplx e = std::exp(-u);
        return e / (1.0 - e);
    }
    return 1.0 / expm1(u);
}

// 1/(e^u + 1)
cplx inv_expp1(cplx u) {
    if (u.real() > 0.0) {
        const cplx e = std::exp(-u);
        return e / (1.0 + e);
    }
    return 1.0 / (std::exp(u) + 1.0);
}

cplx real_power(double x, cplx e) {
    if (e.imag() == 0.0) return std::pow(x, e.real());
    return std::exp(e * std::log(x));
}

// Sums term(n) for n >= 1. envelope(x) bounds |term| at x = n - shift and
// decays at least geometrically with ratio ((x+1)/x)^{max(sigma-1,0)} e^{-rate}
// for all later terms, which certifies the tail.
template <class Term>
SeriesValue certified_sum(Term&& term, double shift, double sigma, double rate, double env_scale,
                          const PrecisionConfig& cfg) {
    if (!(rate > 0.0)) throw DomainError("lambert: series requires exponential decay");
    ComplexSum s;
    const double growth = std::max(sigma - 1.0, 0.0);
    for (long n = 1; n <= cfg.max_series_terms; ++n) {
        s += term(n);
        const double x = n - shift;
        const double q = std::pow((x + 1.0) / x, growth) * std::exp(-rate);
        if (q >= 1.0) continue;
        const double env = env_scale * std::pow(x, sigma - 1.0) * std::exp(-rate * x) / -std::expm1(-rate * x);
        const double bound = env * q / (1.0 - q);
        if (bound <= cfg.tail_cut * std::abs(s.value()) || bound < 1e-300) return {s.value(), bound, n};
    }
    throw ConvergenceError("lambert: max_series_terms exhausted", s.value(), 0.0);
}

}  // namespace

SeriesValue lambert_shifted(const LambertParams& p, const PrecisionConfig& cfg) {
    p.validate();
    auto term = [&](long n) {
        const double x = n - p.a;
        return real_power(x, p.s - 1.0) * inv_expm1(x * p.y);
    };
    return certified_sum(term, p.a, p.s.real(), p.y.real(), 1.0, cfg);
}

SeriesValue lambert_alternating(cplx s, cplx y, const PrecisionConfig& cfg) {
    LambertParams{s, y, 0.0}.validate();
    auto term = [&](long n) { return real_power(n, s - 1.0) * inv_expp1(static_cast<double>(n) * y); };
    // |e^u + 1| >= e^{Re u} - 1, so the same envelope applies
    return certified_sum(term, 0.0, s.real(), y.real(), 1.0, cfg);
}

SeriesValue lambert_sigma2m(int m, cplx y, const PrecisionConfig& cfg) {
    if (m < 1) throw DomainError("lambert_sigma2m: m must be positive");
    return lambert_shifted({2.0 * m + 1.0, y, 0.0}, cfg);
}

SeriesValue lambert_char4(int m, cplx beta, const PrecisionConfig& cfg) {
    if (m < 2) throw DomainError("lambert_char4: requires m > 1");
    LambertParams{0.0, beta, 0.0}.validate();
    auto term = [&](long n) -> cplx {
        const int c = chi4(n);
        if (c == 0) return 0.0;
        return static_cast<double>(c) * std::pow(static_cast<double>(n), 2 * m - 1) *
               inv_expm1(static_cast<double>(n) * beta);
    };
    return certified_sum(term, 0.0, 2.0 * m, beta.real(), 1.0, cfg);
}

SeriesValue lambert_odd(cplx s, cplx y, const PrecisionConfig& cfg) {
    LambertParams{s, y, 0.0}.validate();
    auto term = [&](long n) -> cplx {
        if (n % 2 == 0) return 0.0;
        return real_power(n, s - 1.0) * inv_expm1(static_cast<double>(n) * y);
    };
    return certified_sum(term, 0.0, s.real(), y.real(), 1.0, cfg);
}

SeriesValue lambert_twisted(cplx s, cplx alpha, double a, const PrecisionConfig& cfg) {
    LambertParams{s, alpha, a}.validate();
    const cplx up = std::exp(0.5 * pi * I * s);
    const cplx down = std::exp(-0.5 * pi * I * s);
    const cplx shift = 2.0 * pi * I * a;
    auto term = [&](long n) {
        const cplx u = static_cast<double>(n) * alpha;
        return 0.5 * real_power(n, s - 1.0) * (up * inv_expm1(u - shift) + down * inv_expm1(u + shift));
    };
    const double scale = 0.5 * (std::abs(up) + std::abs(down));
    return certified_sum(term, 0.0, s.real(), alpha.real(), scale, cfg);
}

SeriesValue lipschitz_lhs(double a, cplx s, cplx tau, const PrecisionConfig& cfg) {
    if (!(a >= 0.0 && a < 1.0)) throw DomainError("lipschitz: requires 0 <= a < 1");
    if (!(tau.imag() > 0.0)) throw DomainError("lipschitz: requires Im(tau) > 0");
    const double rate = 2.0 * pi * tau.imag();
    ComplexSum s_sum;
    const double growth = std::max(s.real() - 1.0, 0.0);
    for (long n = 1; n <= cfg.max_series_terms; ++n) {
        const double x = n - a;
        s_sum += std::exp(2.0 * pi * I * tau * x) * real_power(x, s - 1.0);
        const double q = std::pow((x + 1.0) / x, growth) * std::exp(-rate);
        if (q >= 1.0) continue;
        const double bound = std::pow(x, s.real() - 1.0) * std::exp(-rate * x) * q / (1.0 - q);
        if (bound <= cfg.tail_cut * std::abs(s_sum.value()) || bound < 1e-300) return {s_sum.value(), bound, n};
    }
    throw ConvergenceError("lipschitz_lhs: max_series_terms exhausted", s_sum.value(), 0.0);
}

namespace {

cplx unit_phase(double a, long k) {
    return std::exp(2.0 * pi * I * std::fmod(a * static_cast<double>(k), 1.0));
}

// (-2 pi i)^s on the principal branch
cplx minus_two_pi_i_pow(cplx s) { return std::exp(s * cplx(std::log(2.0 * pi), -0.5 * pi)); }

}  // namespace

SeriesValue lipschitz_rhs(double a, cplx s, cplx tau, long K, const PrecisionConfig& cfg) {
    if (!(a >= 0.0 && a < 1.0)) throw DomainError("lipschitz: requires 0 <= a < 1");
    if (!(tau.imag() > 0.0)) throw DomainError("lipschitz: requires Im(tau) > 0");
    if (!(s.real() > 1.0)) throw DomainError("lipschitz: requires Re(s) > 1");
    if (K < 0) throw DomainError("lipschitz_rhs: K must be nonnegative");
    ComplexSum sum;
    for (long k = -K; k <= K; ++k) sum += unit_phase(a, k) * cpow(static_cast<double>(k) + tau, -s);
    // k > K and k < -K; (-(N - tau))^{-s} = e^{-i pi s} (N - tau)^{-s} for Im(tau) > 0
    const double n0 = static_cast<double>(K + 1);
    const cplx upper = unit_phase(a, K + 1) * periodic_zeta_tail(a, s, n0 + tau, cfg);
    const cplx lower = std::exp(-pi * I * s) * unit_phase(-a, K + 1) * periodic_zeta_tail(-a, s, n0 - tau, cfg);
    sum += upper;
    sum += lower;
    const cplx factor = gamma(s) / minus_two_pi_i_pow(s);
    const cplx value = factor * sum.value();
    // the tails are evaluated to working precision rather than bounded
    const double bound = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(factor) *
                         (std::abs(upper) + std::abs(lower));
    return {value, bound, 2 * K + 1};
}

SeriesValue lambert_via_hurwitz(const LambertParams& p, long K, const PrecisionConfig& cfg) {
    p.validate();
    if (!(p.s.real() > 1.0)) throw DomainError("lambert_via_hurwitz: requires Re(s) > 1");
    if (p.a == 0.0 && !(p.s.real() > 2.0))
        throw ConvergenceError("lambert_via_hurwitz: k-sum decays too slowly for Re(s) <= 2 at a = 0", 0.0, 0.0);
    const cplx s = p.s;
    const cplx b = 2.0 * pi / p.y;
    const long k_direct =
        std::max<long>(K, static_cast<long>(std::ceil((30.0 + 2.0 * std::abs(s)) / std::abs(b))));

    ComplexSum sum;
    sum += riemann_zeta(s, cfg);
    for (long k = 1; k <= k_direct; ++k) {
        const cplx bk = b * static_cast<double>(k);
        sum += unit_phase(p.a, k) * hurwitz_zeta(s, 1.0 - I * bk, cfg);
        sum += unit_phase(-p.a, k) * hurwitz_zeta(s, 1.0 + I * bk, cfg);
    }

    // zeta(s, A) ~ A^{1-s}/(s-1) + A^{-s}/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} A^{1-s-2j}, with
    // 1 - ibk = -ib (k + i/b) and 1 + ibk = ib (k - i/b) on consistent principal branches.
    const double n0 = static_cast<double>(k_direct + 1);
    const cplx up_phase = unit_phase(p.a, k_direct + 1);
    const cplx down_phase = unit_phase(-p.a, k_direct + 1);
    auto power_tail = [&](cplx power) {
        return cpow(-I * b, -power) * up_phase * periodic_zeta_tail(p.a, power, n0 + I / b, cfg) +
               cpow(I * b, -power) * down_phase * periodic_zeta_tail(-p.a, power, n0 - I / b, cfg);
    };
    ComplexSum tail;
    tail += power_tail(s - 1.0) / (s - 1.0);
    tail += 0.5 * power_tail(s);
    cplx poch = s;  // (s)_{2j-1}
    double fact = 2.0;
    double last = 0.0;
    for (int j = 1; j <= 10; ++j) {
        const cplx term = bernoulli_double(2 * j) / fact * poch * power_tail(s + 2.0 * j - 1.0);
        tail += term;
        last = std::abs(term);
        if (last <= 1e-18 * std::abs(sum.value())) break;
        poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    sum += tail.value();
    const cplx factor = gamma(s) * cpow(p.y, -s);
    return {factor * sum.value(), std::abs(factor) * last, 2 * k_direct + 1};
}

cplx cosine_zeta(cplx s, double a, const PrecisionConfig& cfg) {
    a -= std::floor(a);
    const cplx up = std::exp(0.5 * pi * I * s);
    const cplx down = std::exp(-0.5 * pi * I * s);
    if (a == 0.0) return 0.5 * (up + down) * riemann_zeta(s, cfg);
    const cplx z = std::exp(2.0 * pi * I * a);
    // Li_s(z) = z sum_{k>=0} z^k (k+1)^{-s}
    const cplx li_up = z * periodic_zeta_tail(a, s, 1.0, cfg);
    const cplx li_down = std::conj(z) * periodic_zeta_tail(-a, s, 1.0, cfg);
    return 0.5 * (up * li_up + down * li_down);
}

}  // namespace ramanujan
