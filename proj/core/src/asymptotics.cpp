#include "ramanujan/asymptotics.hpp"

#include "ramanujan/lambert.hpp"

#include <limits>

namespace ramanujan {

namespace {

double sigma_power(int k, long n) {
    double s = 0.0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += std::pow(static_cast<double>(d), k);
        const long e = n / d;
        if (e != d) s += std::pow(static_cast<double>(e), k);
    }
    return s;
}

// sum_{n > n0} sigma_{2m}(n) n^{-2j}
double sigma_tail(int m, int j, long n0, const PrecisionConfig& cfg) {
    const int decay = 2 * j - 2 * m;  // sigma_{2m}(n) n^{-2j} ~ n^{-decay}
    const double full = riemann_zeta(2.0 * j, cfg).real() * riemann_zeta(static_cast<double>(decay), cfg).real();
    if (n0 == 0) return full;
    if (decay - 1 < 8) {
        NeumaierSum partial;
        for (long n = 1; n <= n0; ++n) partial.add(sigma_power(2 * m, n) * std::pow(static_cast<double>(n), -2.0 * j));
        return full - partial.value();
    }
    NeumaierSum s;
    for (long n = n0 + 1;; ++n) {
        const double t = sigma_power(2 * m, n) * std::pow(static_cast<double>(n), -2.0 * j);
        s.add(t);
        if (t <= 1e-18 * s.value() || n > n0 + cfg.max_series_terms) break;
    }
    return s.value();
}

}  // namespace

SeriesValue sigma2m_transformed(int m, cplx y, int order, const PrecisionConfig& cfg) {
    if (m < 1) throw DomainError("sigma2m_transformed: requires m >= 1");
    if (order < 0) throw DomainError("sigma2m_transformed: requires order >= 0");
    if (!(y.real() > 0.0)) throw DomainError("sigma2m_transformed: requires Re(y) > 0");
    const int M = m + order;
    const cplx w1 = 4.0 * pi * pi / y;
    constexpr double asymptotic_from = 60.0;

    long n0 = 0;
    while ((n0 + 1) * w1.real() < asymptotic_from) ++n0;

    SeriesValue out;
    ComplexSum bracket;
    for (long n = 1; n <= n0; ++n) bracket += sigma_power(2 * m, n) * stable_G(M, static_cast<double>(n) * w1, cfg);
    out.terms = n0;

    // sum_{n > n0} sigma_{2m}(n) G_M(n w1) = -sum_{j > M} (2j-1)! w1^{-2j} sum_{n > n0} sigma_{2m}(n) n^{-2j}
    const cplx inv_w2 = 1.0 / (w1 * w1);
    cplx c = std::exp(std::lgamma(2.0 * (M + 1)) - 2.0 * (M + 1) * std::log(w1));  // (2j-1)! w1^{-2j}
    double previous = std::numeric_limits<double>::infinity();
    double last = 0.0;
    for (int j = M + 1;; ++j) {
        const cplx term = c * sigma_tail(m, j, n0, cfg);
        const double size = std::abs(term);
        if (size > previous) break;
        bracket -= term;
        ++out.terms;
        last = size;
        if (size <= cfg.tail_cut * std::abs(bracket.value()) || size == 0.0 || j > 160) break;
        previous = size;
        c *= (2.0 * j) * (2.0 * j + 1.0) * inv_w2;
    }

    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const cplx scale = sign * (2.0 / pi) * std::pow(2.0 * pi / y, 2 * m + 1);
    out.value = scale * bracket.value();
    out.tail_bound = std::abs(scale) * last;
    return out;
}

cplx sigma2m_asymptotic(int m, cplx y, int r, const PrecisionConfig& cfg) {
    if (m < 1) throw DomainError("sigma2m_asymptotic: requires m >= 1");
    if (r < -1) throw DomainError("sigma2m_asymptotic: requires r >= -1");
    if (!(y.real() > 0.0)) throw DomainError("sigma2m_asymptotic: requires Re(y) > 0");
    const double zeta_odd = riemann_zeta(2.0 * m + 1.0, cfg).real();
    cplx value = factorial(2 * m) * zeta_odd / std::pow(y, 2 * m + 1) - bernoulli_double(2 * m) / (2.0 * m * y);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    const double pre = 2.0 * sign / (pi * std::pow(2.0 * pi, 2 * m - 1));
    ComplexSum corr;
    for (int j = 1; j <= r + 1; ++j) {
        const double coef = std::exp(std::lgamma(2.0 * m + 2.0 * j) - 4.0 * j * std::log(2.0 * pi)) *
                            riemann_zeta(2.0 * m + 2.0 * j, cfg).real() * riemann_zeta(2.0 * j, cfg).real();
        corr += coef * std::pow(y, 2 * j - 1);
    }
    return value - pre * corr.value();
}

PlanePartitionSeries plane_partition_product(int N) {
    if (N < 0) throw DomainError("plane_partition_product: requires N >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(N) + 1, BigInt(0));
    c[0] = 1;
    std::vector<BigInt> next;
    for (int n = 1; n <= N; ++n) {
        // (1 - x^n)^{-n} = sum_j C(n+j-1, j) x^{nj}
        next = c;
        BigInt binom = 1;
        for (int j = 1; n * j <= N; ++j) {
            binom = binom * (n + j - 1) / j;
            const int shift = n * j;
            for (int k = N; k >= shift; --k) next[k] += binom * c[k - shift];
        }
        c.swap(next);
    }
    return {std::move(c)};
}

double wright_constant(const PrecisionConfig& cfg) {
    const GaussRule& rule = gauss_legendre(cfg.quad_order);
    // (0, 1] with y = e^{-t}: the log y singularity becomes a decaying polynomial factor
    auto lower = [](double t) {
        const double y = std::exp(-t);
        return -t * y * y / std::expm1(2.0 * pi * y);
    };
    auto upper = [](double y) { return y * std::log(y) / std::expm1(2.0 * pi * y); };
    const cplx a = integrate_panels(lower, 0.0, 45.0, 0.5, rule);
    const cplx b = integrate_panels(upper, 1.0, 8.0, 0.25, rule);
    return 2.0 * (a + b).real();
}

double wright_delta(int j) {
    if (j < 1) throw DomainError("wright_delta: requires j >= 1");
    const double z = riemann_zeta(2.0 * j + 2.0).real() * riemann_zeta(2.0 * j).real();
    return std::exp(std::lgamma(2.0 * j + 2.0) - 4.0 * j * std::log(2.0 * pi)) * z / (2.0 * pi * pi * j);
}

namespace {

double check_x(double x, const char* who) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError(std::string(who) + ": requires 0 < x < 1");
    return -std::log(x);
}

// zeta(3)/y^2 + log(y)/12 - sum_{j<=r+1} delta_j y^{2j}
double wright_main_terms(double y, int r) {
    double v = riemann_zeta(3.0).real() / (y * y) + std::log(y) / 12.0;
    for (int j = 1; j <= r + 1; ++j) v -= wright_delta(j) * std::pow(y, 2 * j);
    return v;
}

}  // namespace

double wright_logF(double x, int r, const PrecisionConfig& cfg) {
    const double y = check_x(x, "wright_logF");
    if (r < -1) throw DomainError("wright_logF: requires r >= -1");
    return wright_constant(cfg) + wright_main_terms(y, r);
}

double log_F_product(double x, int factors, bool continue_tail) {
    check_x(x, "log_F_product");
    if (factors < 0) throw DomainError("log_F_product: requires factors >= 0");
    NeumaierSum s;
    double xn = 1.0;
    for (long n = 1;; ++n) {
        xn *= x;
        const double t = -static_cast<double>(n) * std::log1p(-xn);
        if (n > factors) {
            if (!continue_tail || t <= 1e-18 * s.value()) break;
        }
        s.add(t);
    }
    return s.value();
}

double wright_error(double x, int r, const PrecisionConfig& cfg) {
    const double y = check_x(x, "wright_error");
    if (r < -1) throw DomainError("wright_error: requires r >= -1");
    // d/dy of (wright_logF - log F) is the order r+1 remainder of sum sigma_2(n) e^{-ny}
    auto e = [&](double t) { return sigma2m_transformed(1, t, r + 1, cfg).value.real(); };
    const GaussRule& rule = gauss_legendre(cfg.quad_order);
    return integrate_panels(e, 0.0, y, std::max(y, 0.05), rule).real();
}

double fit_order(const std::vector<double>& scales, const std::vector<double>& errors) {
    if (scales.size() != errors.size()) throw DomainError("fit_order: size mismatch");
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        const double e = std::abs(errors[i]);
        if (e > 0.0 && std::isfinite(e) && scales[i] > 0.0)
            pts.emplace_back(std::log(scales[i]), std::log(e));
    }
    if (pts.size() < 3) throw DomainError("fit_order: fewer than 3 usable points");
    double mx = 0.0, my = 0.0;
    for (auto [a, b] : pts) {
        mx += a;
        my += b;
    }
    mx /= pts.size();
    my /= pts.size();
    double sxy = 0.0, sxx = 0.0;
    for (auto [a, b] : pts) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
    }
    if (sxx == 0.0) throw DomainError("fit_order: scales are all equal");
    return sxy / sxx;
}

AsymptoticReport sigma2m_order_report(int m, int r, const std::vector<double>& ys, const PrecisionConfig& cfg) {
    AsymptoticReport rep;
    rep.label = "sigma_2m small-y expansion";
    rep.scale_name = "y";
    rep.eval_points = ys;
    rep.truncation_order = r;
    rep.expected_exponent = 2.0 * r + 3.0;
    for (double y : ys) {
        if (!(y > 0.0)) throw DomainError("sigma2m_order_report: requires y > 0");
        rep.predicted.push_back(sigma2m_asymptotic(m, y, r, cfg).real());
        rep.exact.push_back(lambert_sigma2m(m, y, cfg).value.real());
        rep.errors.push_back(std::abs(sigma2m_transformed(m, y, r + 1, cfg).value.real()));
    }
    rep.fitted_exponent = fit_order(ys, rep.errors);
    return rep;
}

AsymptoticReport wright_order_report(int r, const std::vector<double>& xs, int factors, const PrecisionConfig& cfg) {
    AsymptoticReport rep;
    rep.label = "plane partition generating function";
    rep.scale_name = "log(1/x)";
    rep.eval_points = xs;
    rep.truncation_order = r;
    rep.expected_exponent = 2.0 * r + 4.0;
    rep.constant_integral = wright_constant(cfg);
    std::vector<double> scales;
    std::vector<double> detrended;  // log F - main terms = c - error
    for (double x : xs) {
        const double y = check_x(x, "wright_order_report");
        const double exact = log_F_product(x, factors, true);
        scales.push_back(y);
        rep.exact.push_back(exact);
        rep.predicted.push_back(rep.constant_integral + wright_main_terms(y, r));
        rep.errors.push_back(std::abs(wright_error(x, r, cfg)));
        detrended.push_back(exact - wright_main_terms(y, r));
    }
    rep.fitted_exponent = fit_order(scales, rep.errors);

    // least squares for detrended = alpha + beta y^{2r+4}; alpha estimates c
    const std::size_t n = scales.size();
    double su = 0.0, sv = 0.0, suu = 0.0, suv = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = std::pow(scales[i], rep.expected_exponent);
        su += u;
        sv += detrended[i];
        suu += u * u;
        suv += u * detrended[i];
    }
    const double det = n * suu - su * su;
    rep.constant_regression = det != 0.0 ? (suu * sv - su * suv) / det : sv / n;
    return rep;
}

}  // namespace ramanujan
