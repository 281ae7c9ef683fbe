#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramanujan {

using cplx = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr cplx I{0.0, 1.0};

// Errors ---------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (poles, branch cuts, Re(s) <= 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Requested index beyond a supported table.
class RangeError : public Error {
public:
    using Error::Error;
};

// Violated hypothesis of an identity or malformed spec.
class SpecError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, cplx partial, double last_term)
        : Error(what), partial_sum(partial), last_term_size(last_term) {}
    cplx partial_sum;
    double last_term_size;
};

// Asymptotic series started diverging before the requested number of terms.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, int optimal)
        : Error(what), optimal_terms(optimal) {}
    int optimal_terms;
};

// Configuration ----------------------------------------------------------------

struct PrecisionConfig {
    double rel_tol = 1e-15;
    double abs_tol = 1e-15;
    long max_series_terms = 2'000'000;
    int em_order = 20;    // highest Bernoulli index used in Euler-Maclaurin corrections
    int quad_order = 20;  // Gauss-Legendre nodes per panel
    double tail_cut = 1e-18;

    // Throws SpecError when an invariant is violated.
    void validate() const;
};

// Compensated summation --------------------------------------------------------

// Neumaier's variant of Kahan summation on each component.
class NeumaierSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexSum {
public:
    ComplexSum& operator+=(cplx z) noexcept {
        re_.add(z.real());
        im_.add(z.imag());
        return *this;
    }
    ComplexSum& operator-=(cplx z) noexcept { return *this += -z; }
    cplx value() const noexcept { return {re_.value(), im_.value()}; }

private:
    NeumaierSum re_, im_;
};

struct SeriesValue {
    cplx value{};
    double tail_bound = 0.0;  // bound (or estimate) on the neglected remainder
    long terms = 0;
};

// Sums terms(0), terms(1), ... with compensated arithmetic, stopping once three
// consecutive terms fall below abs_tol + rel_tol*|S|.
SeriesValue sum_accelerated(const std::function<cplx(long)>& terms, const PrecisionConfig& cfg);

// Sums terms(0..n-1) directly and adds tail(n), an analytic estimate of the rest.
SeriesValue sum_with_tail(const std::function<cplx(long)>& terms, long n,
                          const std::function<cplx(long)>& tail);

// Quadrature -----------------------------------------------------------------

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

// Gauss-Legendre rule with n nodes (2 <= n <= 256); computed once and cached.
const GaussRule& gauss_legendre(int n);

template <class F>
cplx integrate_panel(F&& f, double a, double b, const GaussRule& rule) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    ComplexSum s;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * cplx(f(mid + half * rule.nodes[i]));
    return half * s.value();
}

// Integrates over [a, b] split into equal panels no wider than max_width.
template <class F>
cplx integrate_panels(F&& f, double a, double b, double max_width, const GaussRule& rule) {
    if (b <= a) return 0.0;
    const long n = std::max<long>(1, static_cast<long>(std::ceil((b - a) / max_width)));
    const double h = (b - a) / static_cast<double>(n);
    ComplexSum s;
    for (long k = 0; k < n; ++k) s += integrate_panel(f, a + k * h, a + (k + 1) * h, rule);
    return s.value();
}

// Special functions ------------------------------------------------------------

// Exact B_n with B_1 = -1/2, n <= 64.
Rational bernoulli(int n);
double bernoulli_double(int n);

double factorial(int n);

cplx gamma(cplx z);
cplx riemann_zeta(cplx s, const PrecisionConfig& cfg = {});
cplx hurwitz_zeta(cplx s, cplx a, const PrecisionConfig& cfg = {});
cplx digamma(cplx z);
cplx shi(cplx z);
cplx chi(cplx z);

// e^z - 1 without cancellation for small |z|.
cplx expm1(cplx z);

// sum_{k>=0} e^{2 pi i a k} (k + q)^{-p}. For a = 0 this is hurwitz_zeta(p, q);
// otherwise p may be any complex number and Im(q) != 0 or Re(q) > 0.
cplx periodic_zeta_tail(double a, cplx p, cplx q, const PrecisionConfig& cfg = {});

// G_m(w) = sinh(w)Shi(w) - cosh(w)Chi(w) + sum_{j=1}^m (2j-1)! w^{-2j}, Re(w) > 0.
cplx stable_G(int m, cplx w, const PrecisionConfig& cfg = {});

struct AsymptoticValue {
    cplx value{};
    double error_estimate = 0.0;
    int terms = 0;
};

// The two evaluation branches of stable_G, exposed for cross-checks.
cplx stable_G_direct(int m, cplx w, const PrecisionConfig& cfg = {});
AsymptoticValue stable_G_asymptotic(int m, cplx w);

inline constexpr double g_switch = 25.0;

}  // namespace ramanujan
