#include "ramanujan/numerics.hpp"

#include <array>
#include <mutex>
#include <sstream>

namespace ramanujan {

void PrecisionConfig::validate() const {
    std::ostringstream why;
    if (!(rel_tol > 0)) why << "rel_tol must be positive; ";
    if (!(abs_tol > 0)) why << "abs_tol must be positive; ";
    if (max_series_terms < 16) why << "max_series_terms must be >= 16; ";
    if (em_order < 2 || em_order > 30 || em_order % 2 != 0)
        why << "em_order must be even and in [2, 30]; ";
    if (quad_order < 8 || quad_order > 256) why << "quad_order must be in [8, 256]; ";
    if (!(tail_cut > 0)) why << "tail_cut must be positive; ";
    const std::string msg = why.str();
    if (!msg.empty()) throw SpecError("invalid precision config: " + msg.substr(0, msg.size() - 2));
}

SeriesValue sum_accelerated(const std::function<cplx(long)>& terms, const PrecisionConfig& cfg) {
    ComplexSum s;
    int small_run = 0;
    double last = 0.0;
    for (long n = 0; n < cfg.max_series_terms; ++n) {
        const cplx t = terms(n);
        s += t;
        last = std::abs(t);
        const double threshold = cfg.abs_tol + cfg.rel_tol * std::abs(s.value());
        small_run = last < threshold ? small_run + 1 : 0;
        if (small_run == 3) return {s.value(), last, n + 1};
    }
    throw ConvergenceError("series did not converge within max_series_terms", s.value(), last);
}

SeriesValue sum_with_tail(const std::function<cplx(long)>& terms, long n,
                          const std::function<cplx(long)>& tail) {
    ComplexSum s;
    for (long k = 0; k < n; ++k) s += terms(k);
    const cplx t = tail(n);
    s += t;
    return {s.value(), 0.0, n};
}

namespace {

GaussRule build_gauss(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 2 || n > 256) throw RangeError("gauss_legendre: order must be in [2, 256]");
    static std::array<std::once_flag, 257> flags;
    static std::array<GaussRule, 257> rules;
    std::call_once(flags[n], [n] { rules[n] = build_gauss(n); });
    return rules[n];
}

namespace {

std::vector<Rational> build_bernoulli() {
    constexpr int nmax = 64;
    std::vector<Rational> b(nmax + 1);
    b[0] = 1;
    // sum_{k=0}^{n} C(n+1, k) B_k = 0
    for (int n = 1; n <= nmax; ++n) {
        Rational acc = 0;
        BigInt binom = 1;  // C(n+1, 0)
        for (int k = 0; k < n; ++k) {
            acc += Rational(binom) * b[k];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        b[n] = -acc / Rational(n + 1);
    }
    return b;
}

const std::vector<Rational>& bernoulli_table() {
    static const std::vector<Rational> table = build_bernoulli();
    return table;
}

}  // namespace

Rational bernoulli(int n) {
    if (n < 0 || n > 64) throw RangeError("bernoulli: n must be in [0, 64]");
    return bernoulli_table()[n];
}

double bernoulli_double(int n) {
    if (n < 0 || n > 64) throw RangeError("bernoulli: n must be in [0, 64]");
    static const std::vector<double> table = [] {
        std::vector<double> t;
        for (const auto& r : bernoulli_table()) t.push_back(r.convert_to<double>());
        return t;
    }();
    return table[n];
}

double factorial(int n) {
    if (n < 0) throw DomainError("factorial of a negative integer");
    if (n > 170) throw RangeError("factorial overflows double");
    return std::tgamma(n + 1.0);
}

}  // namespace ramanujan
