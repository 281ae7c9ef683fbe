#include "generators.hpp"
#include "ramanujan/asymptotics.hpp"
#include "ramanujan/lambert.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace ramanujan;
using ramanujan::testing::rel_diff;

TEST(DivisorSigma, SmallCases) {
    EXPECT_EQ(divisor_sigma(2.0, 6), cplx(50.0));
    EXPECT_EQ(divisor_sigma(0.0, 12), cplx(6.0));
    EXPECT_EQ(divisor_sigma(cplx(1.7, -0.3), 1), cplx(1.0));
    // brute force over all d <= n
    for (long n = 1; n <= 60; ++n) {
        double want = 0.0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) want += static_cast<double>(d * d * d);
        EXPECT_EQ(divisor_sigma(3.0, n).real(), want);
    }
    EXPECT_THROW(divisor_sigma(1.0, 0), DomainError);
}

TEST(Chi4, ValuesAndPeriod) {
    EXPECT_EQ(chi4(1), 1);
    EXPECT_EQ(chi4(2), 0);
    EXPECT_EQ(chi4(3), -1);
    EXPECT_EQ(chi4(4), 0);
    for (long n = -20; n <= 20; ++n) EXPECT_EQ(chi4(n), chi4(n + 4));
}

TEST(Chi4Property, MultiplicativeOnCoprimePairs) {
    for (long n = 1; n < 100; ++n)
        for (long m = 1; m < 100; ++m)
            if (std::gcd(n, m) == 1) EXPECT_EQ(chi4(n) * chi4(m), chi4(n * m)) << n << " " << m;
}

TEST(LambertShifted, ClassicalEvaluations) {
    const SeriesValue schlomilch = lambert_shifted({2.0, 2.0 * pi, 0.0});
    EXPECT_NEAR(schlomilch.value.real(), 1.0 / 24.0 - 1.0 / (8.0 * pi), 1e-15);
    const SeriesValue glaisher = lambert_shifted({6.0, 2.0 * pi, 0.0});
    EXPECT_NEAR(glaisher.value.real(), 1.0 / 504.0, 1e-16);
    EXPECT_GT(glaisher.terms, 0);
    EXPECT_LE(glaisher.tail_bound, 1e-15 * glaisher.value.real());
}

TEST(LambertShifted, TailBoundCoversTruncation) {
    PrecisionConfig loose;
    loose.tail_cut = 1e-6;
    const SeriesValue coarse = lambert_shifted({3.5, 0.3, 0.25}, loose);
    const SeriesValue fine = lambert_shifted({3.5, 0.3, 0.25});
    EXPECT_LE(std::abs(fine.value - coarse.value), coarse.tail_bound);
}

TEST(LambertShifted, Domain) {
    EXPECT_THROW(lambert_shifted({2.0, -1.0, 0.0}), DomainError);
    EXPECT_THROW(lambert_shifted({2.0, 1.0, 1.0}), DomainError);
}

TEST(LambertAlternating, RearrangementRoute) {
    for (int m = 1; m <= 4; ++m)
        for (double y : {0.7, 2.0, 2.0 * pi}) {
            const double s = 2.0 * m;
            const cplx alt = lambert_alternating(s, y).value;
            const cplx route = lambert_shifted({s, y, 0.0}).value - 2.0 * lambert_shifted({s, 2.0 * y, 0.0}).value;
            EXPECT_LE(rel_diff(alt, route), 1e-13) << m << " " << y;
        }
}

TEST(LambertSigma2m, CoefficientsAreDivisorSums) {
    // sum sigma_2(n) q^n at tiny q isolates the first coefficients
    const double y = 30.0;
    const double q = std::exp(-y);
    const cplx v = lambert_sigma2m(1, y).value;
    EXPECT_NEAR(v.real() / q, 1.0 + 5.0 * q + 10.0 * q * q, 1e-12);
    for (long n = 1; n <= 30; ++n) {
        double brute = 0.0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) brute += static_cast<double>(d * d);
        EXPECT_EQ(divisor_sigma(2.0, n).real(), brute);
    }
}

TEST(LambertSigma2mProperty, MatchesPlanePartitionLogDerivative) {
    // x F'(x)/F(x) from the exact coefficients of prod (1 - x^n)^{-n}
    const int N = 400;
    const PlanePartitionSeries F = plane_partition_product(N);
    for (double y : {0.5, 1.0, 2.0}) {
        const double x = std::exp(-y);
        long double num = 0.0L, den = 0.0L, xk = 1.0L;
        for (int k = 0; k <= N; ++k) {
            const long double c = F.coefficients[k].convert_to<long double>();
            den += c * xk;
            num += k * c * xk;
            xk *= x;
        }
        const double ratio = static_cast<double>(num / den);
        EXPECT_LE(rel_diff(lambert_sigma2m(1, y).value, ratio), 1e-9) << y;
    }
}

TEST(LambertChar4, SupportSplit) {
    const int m = 2;
    const double beta = 0.8;
    double plus = 0.0, minus = 0.0;
    for (long n = 1; n < 400; ++n) {
        const double t = std::pow(static_cast<double>(n), 2 * m - 1) / std::expm1(n * beta);
        if (n % 4 == 1) plus += t;
        if (n % 4 == 3) minus += t;
    }
    EXPECT_LE(rel_diff(lambert_char4(m, beta).value, plus - minus), 1e-13);
    EXPECT_THROW(lambert_char4(1, beta), DomainError);
}

TEST(LambertOdd, EvenTermsRemoved) {
    const cplx s = 4.0, y = 1.3;
    const cplx odd = lambert_odd(s, y).value;
    const cplx all = lambert_shifted({s, y, 0.0}).value;
    const cplx even = std::pow(2.0, 3.0) * lambert_shifted({s, 2.0 * y, 0.0}).value;
    EXPECT_LE(rel_diff(odd, all - even), 1e-14);
}

TEST(LambertTwisted, ReducesToCosineAtZeroShift) {
    const cplx s = 3.3, alpha = 1.7;
    const cplx twisted = lambert_twisted(s, alpha, 0.0).value;
    const cplx plain = std::cos(0.5 * pi * s) * lambert_shifted({s, alpha, 0.0}).value;
    EXPECT_LE(rel_diff(twisted, plain), 1e-14);
}

TEST(Lipschitz, SquareCaseIsClosedForm) {
    const double closed = 1.0 / (4.0 * std::pow(std::sinh(pi), 2));
    EXPECT_NEAR(closed, 0.0018744370024168519608, 1e-18);
    EXPECT_LE(rel_diff(lipschitz_lhs(0.0, 2.0, I).value, closed), 1e-13);
    EXPECT_LE(rel_diff(lipschitz_rhs(0.0, 2.0, I, 20).value, closed), 1e-12);
}

TEST(Lipschitz, LeftSideUnfolds) {
    double direct = 0.0;
    for (int n = 1; n < 40; ++n) direct += std::pow(n, 3) * std::exp(-2.0 * pi * n);
    EXPECT_LE(rel_diff(lipschitz_lhs(0.0, 4.0, I).value, direct), 1e-14);
}

TEST(LipschitzProperty, BothSidesAgree) {
    for (double a : {0.0, 0.25, 0.5, 0.75})
        for (double s : {2.0, 3.5, 5.0})
            for (cplx tau : {I, 2.0 * I, 0.5 * I}) {
                const cplx l = lipschitz_lhs(a, s, tau).value;
                const cplx r = lipschitz_rhs(a, s, tau, 20).value;
                EXPECT_LE(rel_diff(l, r), 1e-9) << a << " " << s << " " << tau;
            }
}

TEST(LambertViaHurwitz, Examples) {
    EXPECT_LE(rel_diff(lambert_via_hurwitz({3.0, 2.0, 0.0}, 8).value, lambert_shifted({3.0, 2.0, 0.0}).value), 1e-9);
    EXPECT_LE(rel_diff(lambert_via_hurwitz({2.5, 1.0, 1.0 / 3.0}, 8).value, lambert_shifted({2.5, 1.0, 1.0 / 3.0}).value),
              1e-8);
    EXPECT_LE(std::abs(lambert_via_hurwitz({3.5, 1.5, 0.0}, 8).value.imag()), 1e-12);
}

TEST(LambertViaHurwitzProperty, RouteEquivalenceGrid) {
    for (double s : {2.5, 3.0, 4.5})
        for (double y : {0.5, 1.0, 2.0 * pi})
            for (double a : {0.0, 0.25, 0.5}) {
                const cplx d = lambert_shifted({s, y, a}).value;
                const cplx h = lambert_via_hurwitz({s, y, a}, 8).value;
                EXPECT_LE(rel_diff(d, h), 1e-8) << s << " " << y << " " << a;
            }
}

TEST(LambertViaHurwitz, ComplexRate) {
    const LambertParams p{cplx(3.2, 0.5), cplx(1.2, 0.7), 0.3};
    EXPECT_LE(rel_diff(lambert_via_hurwitz(p, 8).value, lambert_shifted(p).value), 1e-8);
}

TEST(CosineZeta, SpecialShifts) {
    const cplx s = 3.7;
    EXPECT_LE(rel_diff(cosine_zeta(s, 0.0), std::cos(0.5 * pi * s) * riemann_zeta(s)), 1e-14);
    // a = 1/2 gives -cos(pi s/2) eta(s)
    const cplx eta = (1.0 - std::pow(2.0, 1.0 - s)) * riemann_zeta(s);
    EXPECT_LE(rel_diff(cosine_zeta(s, 0.5), -std::cos(0.5 * pi * s) * eta), 1e-14);
    double direct = 0.0;
    for (int k = 1; k < 200000; ++k) direct += std::cos(0.5 * pi * 3.7 + 2.0 * pi * 0.3 * k) / std::pow(k, 3.7);
    EXPECT_NEAR(cosine_zeta(s, 0.3).real(), direct, 1e-13);
}
