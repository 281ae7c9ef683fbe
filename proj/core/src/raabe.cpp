#include "ramanujan/raabe.hpp"

#include "ramanujan/detail.hpp"

#include <limits>
#include <sstream>

namespace ramanujan {

using detail::cos_pi;
using detail::cpow;

void RaabeParams::validate() const {
    if (!(w.real() > 0.0)) throw DomainError("raabe: requires Re(w) > 0");
    if (!(y > 0.0)) throw DomainError("raabe: requires y > 0");
    const bool nonneg_integer = detail::is_integer(z) && z.real() >= 0.0;
    if (!(z.real() > 0.0) && !nonneg_integer)
        throw DomainError("raabe: requires Re(z) > 0 or z a nonnegative integer");
}

namespace {

constexpr int averaging_levels = 40;

// Repeated averaging of consecutive partial sums; returns the value and the
// difference between the last two levels.
std::pair<cplx, double> average_partial_sums(std::vector<cplx> s) {
    double estimate = 0.0;
    while (s.size() > 1) {
        std::vector<cplx> next(s.size() - 1);
        for (std::size_t i = 0; i + 1 < s.size(); ++i) next[i] = 0.5 * (s[i] + s[i + 1]);
        if (next.size() == 1) estimate = std::abs(next[0] - s[0]);
        s = std::move(next);
    }
    return {s[0], estimate};
}

}  // namespace

QuadValue raabe_direct(const RaabeParams& p, const PrecisionConfig& cfg) {
    p.validate();
    const cplx order = 2.0 * p.z + 1.0;
    const cplx prefactor = 0.5 * gamma(order);
    const cplx iw = I * p.w;
    const double y = p.y;
    auto f = [&](double t) {
        return prefactor * (cpow(t - iw, -order) + cpow(t + iw, -order)) * std::cos(y * t);
    };
    // distance from t to the nearer of the singularities at +-iw
    const double wr = p.w.real(), wi = std::abs(p.w.imag());
    auto dist = [&](double t) { return std::hypot(t - wi, wr); };

    const GaussRule& rule = gauss_legendre(cfg.quad_order);
    long panels = 0;
    auto cell = [&](double a, double b) {
        ComplexSum s;
        double t = a;
        while (t < b) {
            double h = std::min(b - t, 0.4 * dist(t));
            if (b - (t + h) < 1e-9 * (b - a)) h = b - t;
            s += integrate_panel(f, t, t + h, rule);
            t += h;
            ++panels;
        }
        return s.value();
    };

    const double period = pi / y;
    const double t_settled = std::max(4.0 * std::abs(p.w), 8.0 * period);
    const long k_start = std::max<long>(40, static_cast<long>(std::ceil(t_settled / period)));

    ComplexSum running;
    running += cell(0.0, 0.5 * period);
    for (long k = 1; k <= k_start; ++k) running += cell((k - 0.5) * period, (k + 0.5) * period);
    std::vector<cplx> partial{running.value()};
    for (long k = k_start + 1; k <= k_start + averaging_levels; ++k) {
        running += cell((k - 0.5) * period, (k + 0.5) * period);
        partial.push_back(running.value());
    }
    const auto [value, estimate] = average_partial_sums(std::move(partial));
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) ||
        estimate > 1e-6 * std::abs(value) + 1e-12 * std::abs(prefactor))
        throw ConvergenceError("raabe_direct: cell-sum acceleration failed", value, estimate);
    return {value, estimate, panels};
}

cplx raabe_closed_integer(int m, double y, cplx w, const PrecisionConfig& cfg) {
    if (m < 0) throw DomainError("raabe_closed_integer: m must be nonnegative");
    if (!(y > 0.0)) throw DomainError("raabe_closed_integer: requires y > 0");
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    return std::pow(y, 2 * m) * sign * stable_G(m, y * w, cfg);
}

double raabe_symmetry_check(cplx z, double y, double w, const PrecisionConfig& cfg) {
    if (!(w > 0.0)) throw DomainError("raabe_symmetry_check: w must be real and positive");
    const cplx lhs = cpow(w, 2.0 * z) * raabe_direct({z, y, w}, cfg).value;
    const cplx rhs = cpow(y, 2.0 * z) * raabe_direct({z, w, y}, cfg).value;
    return std::abs(lhs - rhs) / std::max(std::abs(lhs), cfg.abs_tol);
}

AsymptoticValue raabe_asymptotic(cplx z, double y, cplx w, int r) {
    if (r < 0) throw DomainError("raabe_asymptotic: r must be nonnegative");
    RaabeParams{z, y, w}.validate();
    AsymptoticValue out;
    out.terms = r;
    if (detail::is_half_integer(z)) return out;

    const cplx prefactor = -cos_pi(z) * cpow(w, -2.0 * z);
    const cplx inv = 1.0 / (y * w * y * w);
    cplx term = gamma(2.0 * z + 2.0) * inv;  // Gamma(2z+2n)/(yw)^{2n} at n = 1
    ComplexSum s;
    for (int n = 1; n <= r; ++n) {
        s += term;
        const cplx next = term * (2.0 * z + 2.0 * n) * (2.0 * z + 2.0 * n + 1.0) * inv;
        if (n < r && std::abs(next) > std::abs(term)) {
            std::ostringstream msg;
            msg << "raabe_asymptotic: terms grow after n = " << n << " < r = " << r;
            throw TruncationError(msg.str(), n);
        }
        term = next;
    }
    out.value = prefactor * s.value();
    out.error_estimate = std::abs(prefactor * term);
    return out;
}

SeriesValue raabe_sum(cplx z, cplx w, const PrecisionConfig& cfg) {
    if (!(w.real() > 0.0) || !(z.real() > 0.0))
        throw DomainError("raabe_sum: requires Re(w) > 0 and Re(z) > 0");
    // Each term differs from its asymptotic series by about (2 pi n)^{2 Re z} e^{-2 pi n Re w}.
    const double scale = std::max(1.0, std::abs(gamma(2.0 * z + 1.0)));
    const double ratio = std::exp(-2.0 * pi * w.real());
    auto beyond_all_orders = [&](long n) {
        return pi * scale * std::pow(2.0 * pi * n, 2.0 * z.real()) * std::exp(-2.0 * pi * n * w.real()) /
               (1.0 - ratio);
    };
    long n_direct = 1;
    while (beyond_all_orders(n_direct) > 1e-16 || 2.0 * pi * n_direct * std::abs(w) < 30.0) {
        if (++n_direct > 100000)
            throw ConvergenceError("raabe_sum: asymptotic tail not reachable", 0.0, beyond_all_orders(n_direct));
    }

    ComplexSum sum;
    long cells = 0;
    for (long n = 1; n <= n_direct; ++n) {
        const QuadValue q = raabe_direct({z, 2.0 * pi * n, w}, cfg);
        sum += q.value;
        cells += q.cells;
    }

    const cplx prefactor = -cos_pi(z) * cpow(w, -2.0 * z);
    double tail_bound = beyond_all_orders(n_direct + 1);
    if (prefactor != cplx(0.0)) {
        const cplx inv = 1.0 / (2.0 * pi * w * 2.0 * pi * w);
        cplx coef = gamma(2.0 * z + 2.0) * inv;  // Gamma(2z+2j)/(2 pi w)^{2j}
        ComplexSum tail;
        double prev = std::numeric_limits<double>::infinity();
        for (int j = 1; j <= 30; ++j) {
            const cplx term = coef * hurwitz_zeta(2.0 * j, static_cast<double>(n_direct + 1), cfg);
            const double size = std::abs(term);
            if (size > prev) break;
            tail += term;
            prev = size;
            if (size <= 1e-18 * std::abs(tail.value())) break;
            coef *= (2.0 * z + 2.0 * j) * (2.0 * z + 2.0 * j + 1.0) * inv;
        }
        sum += prefactor * tail.value();
        tail_bound += std::abs(prefactor) * prev;
    }
    return {sum.value(), tail_bound, cells};
}

cplx raabe_sum_closed(cplx z, cplx w, const PrecisionConfig& cfg) {
    if (!(w.real() > 0.0) || !(z.real() > 0.0))
        throw DomainError("raabe_sum_closed: requires Re(w) > 0 and Re(z) > 0");
    const cplx s = 1.0 + 2.0 * z;
    const cplx zetas = hurwitz_zeta(s, I * w, cfg) + hurwitz_zeta(s, -I * w, cfg);
    // the shifts zeta(s, 1 -+ iw) = zeta(s, -+iw) - (-+iw)^{-s} leave sin(pi z)/w^{2z+1} behind
    const cplx shift_term = detail::sin_pi(z) / cpow(w, s);
    return 0.25 * gamma(2.0 * z + 1.0) * (zetas - cos_pi(z) / (z * cpow(w, 2.0 * z)) + shift_term);
}

cplx raabe_sum_closed_at_zero(cplx w) {
    if (!(w.real() > 0.0)) throw DomainError("raabe_sum_closed_at_zero: requires Re(w) > 0");
    return 0.25 * (2.0 * std::log(w) - digamma(I * w) - digamma(-I * w));
}

IdentityCheckResult raabe_integral_check(cplx z, cplx w, const PrecisionConfig& cfg) {
    if (!(w.real() > 0.0) || !(z.real() > 0.0))
        throw DomainError("raabe_integral_check: requires Re(w) > 0 and Re(z) > 0");
    IdentityCheckResult r;
    r.identity = "RAABE_INT";

    const double aw = std::abs(w);
    const double upper = std::max(35.0 / w.real(), 30.0 / aw);
    long cells = 0;
    auto integrand = [&](double y) {
        const QuadValue q = raabe_direct({z, y, w}, cfg);
        cells += q.cells;
        return q.value;
    };
    const GaussRule& rule = gauss_legendre(cfg.quad_order);
    ComplexSum inner;
    const double y0 = std::min(1.0 / aw, upper);
    // geometric panels towards y = 0, where R_z(y, w) has a y^{2z} component
    double right = y0;
    for (int j = 0; j < 36; ++j) {
        inner += integrate_panel(integrand, 0.5 * right, right, rule);
        right *= 0.5;
    }
    inner += integrate_panels(integrand, y0, upper, 1.0 / aw, rule);

    // Large-y tail from the asymptotic series, integrated termwise.
    const cplx prefactor = -cos_pi(z) * cpow(w, -2.0 * z);
    cplx tail = 0.0;
    if (prefactor != cplx(0.0)) {
        const cplx inv = 1.0 / (w * w);
        cplx coef = gamma(2.0 * z + 2.0) * inv;
        ComplexSum t;
        double prev = std::numeric_limits<double>::infinity();
        for (int j = 1; j <= 40; ++j) {
            const cplx term = coef * std::pow(upper, 1.0 - 2.0 * j) / (2.0 * j - 1.0);
            if (std::abs(term) > prev) break;
            t += term;
            prev = std::abs(term);
            coef *= (2.0 * z + 2.0 * j) * (2.0 * z + 2.0 * j + 1.0) * inv;
        }
        tail = prefactor * t.value();
    }
    const double inv_2pi = 1.0 / (2.0 * pi);
    r.lhs = inv_2pi * (inner.value() + tail);
    r.rhs = -0.25 * gamma(2.0 * z + 1.0) * cpow(w, -(2.0 * z + 1.0)) * detail::sin_pi(z);
    r.tolerance = 1e-4;
    r.near_zero = 1e-6;
    r.diagnostics.cells = cells;
    r.diagnostics.tail_bounds[0] = inv_2pi * 2.0 * std::abs(cos_pi(z)) * std::abs(gamma(2.0 * z + 2.0)) /
                                   (upper * std::pow(aw, 2.0 * z.real() + 2.0));
    r.diagnostics.parts = {{"quadrature", inv_2pi * inner.value()}, {"asymptotic_tail", inv_2pi * tail}};
    grade(r, cfg.abs_tol);
    return r;
}

IdentityCheckResult dgkm_identity(cplx u, const PrecisionConfig& cfg) {
    if (!(u.real() > 0.0)) throw DomainError("dgkm_identity: requires Re(u) > 0");
    IdentityCheckResult r;
    r.identity = "DGKM";

    // terms n <= n_direct through G_0(nu); the rest through the asymptotic series of G_0
    long n_direct = 0;
    while ((n_direct + 1) * u.real() < 40.0 || (n_direct + 1) * std::abs(u) < 60.0) ++n_direct;
    ComplexSum lhs;
    for (long n = 1; n <= n_direct; ++n) lhs += raabe_closed_integer(0, 1.0, static_cast<double>(n) * u, cfg);

    const cplx inv = 1.0 / (u * u);
    cplx coef = inv;  // (2j-1)!/u^{2j}
    ComplexSum tail;
    double prev = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 60; ++j) {
        const cplx term = coef * hurwitz_zeta(2.0 * j, static_cast<double>(n_direct + 1), cfg);
        if (std::abs(term) > prev) break;
        tail -= term;
        prev = std::abs(term);
        if (prev <= 1e-18 * std::abs(lhs.value())) break;
        coef *= (2.0 * j) * (2.0 * j + 1.0) * inv;
    }
    lhs += tail.value();
    r.lhs = lhs.value();

    const cplx v = u / (2.0 * pi);
    r.rhs = 0.5 * (std::log(v) - 0.5 * (digamma(I * v) + digamma(-I * v)));
    if (u.imag() == 0.0) {
        r.lhs = r.lhs.real();
        r.rhs = r.rhs.real();
    }
    r.tolerance = 1e-8;
    r.diagnostics.terms = n_direct;
    r.diagnostics.tail_bounds[0] = prev;
    grade(r, cfg.abs_tol);
    return r;
}

}  // namespace ramanujan
