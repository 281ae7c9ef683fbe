#pragma once

// Small-y behaviour of sum sigma_{2m}(n) e^{-ny}, the plane-partition generating function
// F(x) = prod (1 - x^n)^{-n}, and empirical order-of-convergence fits.

#include "ramanujan/numerics.hpp"

#include <limits>
#include <string>
#include <vector>

namespace ramanujan {

// (-1)^m (2/pi) (2 pi/y)^{2m+1} sum_{n>=1} sigma_{2m}(n) G_{m+order}(4 pi^2 n/y).
// order = 0 gives sum sigma_{2m}(n) e^{-ny} - (2m)! zeta(2m+1)/y^{2m+1} + B_{2m}/(2my);
// order = r + 1 gives the error of sigma2m_asymptotic(m, y, r) without cancellation.
// Terms with Re(4 pi^2 n/y) >= 60 are summed through the asymptotic series of G.
SeriesValue sigma2m_transformed(int m, cplx y, int order, const PrecisionConfig& cfg = {});

// (2m)! zeta(2m+1)/y^{2m+1} - B_{2m}/(2my)
//   - 2(-1)^m/(pi (2 pi)^{2m-1}) sum_{j=1}^{r+1} Gamma(2m+2j) zeta(2m+2j) zeta(2j) y^{2j-1}/(2 pi)^{4j}
cplx sigma2m_asymptotic(int m, cplx y, int r, const PrecisionConfig& cfg = {});

struct PlanePartitionSeries {
    std::vector<BigInt> coefficients;  // c_0 .. c_N
};

// Coefficients of prod_{n<=N} (1 - x^n)^{-n} up to degree N, exact.
PlanePartitionSeries plane_partition_product(int N);

// c = 2 int_0^inf y log y/(e^{2 pi y} - 1) dy
double wright_constant(const PrecisionConfig& cfg = {});

// Gamma(2j+2) zeta(2j+2) zeta(2j) / (2 pi^2 j (2 pi)^{4j})
double wright_delta(int j);

// c + zeta(3)/log^2 x + (1/12) log(-log x) - sum_{j=1}^{r+1} delta_j (log x)^{2j}
double wright_logF(double x, int r, const PrecisionConfig& cfg = {});

// -sum_{n<=factors} n log(1 - x^n); with continue_tail the remaining factors are
// added until they no longer change the sum.
double log_F_product(double x, int factors, bool continue_tail = true);

// wright_logF(x, r) - log F(x), computed as int_0^{-log x} of the order r+1
// sigma2m_transformed remainder (m = 1) instead of by subtraction.
double wright_error(double x, int r, const PrecisionConfig& cfg = {});

// Least-squares slope of log|error| against log(scale). Points with zero or
// non-finite error are dropped; throws DomainError if fewer than 3 remain.
double fit_order(const std::vector<double>& scales, const std::vector<double>& errors);

struct AsymptoticReport {
    std::string label;
    std::string scale_name;            // "y" or "log(1/x)"
    std::vector<double> eval_points;   // y, or x for the plane-partition report
    int truncation_order = 0;
    std::vector<double> predicted;
    std::vector<double> exact;
    std::vector<double> errors;        // |exact - predicted|, computed without cancellation
    double fitted_exponent = std::numeric_limits<double>::quiet_NaN();
    double expected_exponent = 0.0;
    // plane-partition report only
    double constant_integral = std::numeric_limits<double>::quiet_NaN();
    double constant_regression = std::numeric_limits<double>::quiet_NaN();
};

AsymptoticReport sigma2m_order_report(int m, int r, const std::vector<double>& ys,
                                      const PrecisionConfig& cfg = {});

// exact = log F(x) from `factors` product factors plus the continued tail.
AsymptoticReport wright_order_report(int r, const std::vector<double>& xs, int factors = 600,
                                     const PrecisionConfig& cfg = {});

}  // namespace ramanujan
