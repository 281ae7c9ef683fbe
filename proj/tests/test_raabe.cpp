#include "generators.hpp"
#include "ramanujan/raabe.hpp"

#include <gtest/gtest.h>

using namespace ramanujan;
using ramanujan::testing::Gen;
using ramanujan::testing::rel_diff;

namespace {

cplx direct(cplx z, double y, cplx w) { return raabe_direct({z, y, w}).value; }

}  // namespace

TEST(RaabeDirect, ReferenceValue) {
    // mpmath quadosc, 30 digits
    EXPECT_LE(rel_diff(direct(0.7, 2.0, 3.0), 0.0060236298122190491947), 1e-10);
}

TEST(RaabeDirect, Validation) {
    EXPECT_THROW(direct(0.5, 1.0, -1.0), DomainError);
    EXPECT_THROW(direct(0.5, -1.0, 1.0), DomainError);
    EXPECT_THROW(direct(-0.5, 1.0, 1.0), DomainError);
    EXPECT_NO_THROW(direct(0.0, 1.0, 1.0));
}

TEST(RaabeClosedInteger, MatchesQuadrature) {
    for (int m = 0; m <= 3; ++m)
        for (double y : {0.5, 1.0, 3.0})
            for (cplx w : {cplx(1.0), cplx(2.5), cplx(1.0, 0.5)}) {
                const cplx closed = raabe_closed_integer(m, y, w);
                EXPECT_LE(rel_diff(direct(static_cast<double>(m), y, w), closed), 1e-8) << m << " " << y << " " << w;
            }
}

TEST(RaabeClosedInteger, ScalesWithFrequency) {
    // R_m(y, w) = y^{2m} (-1)^m G_m(yw)
    const cplx w = 0.8;
    EXPECT_LE(rel_diff(raabe_closed_integer(2, 3.0, w), 81.0 * stable_G(2, 3.0 * w)), 1e-15);
    EXPECT_THROW(raabe_closed_integer(-1, 1.0, w), DomainError);
}

TEST(RaabeProperty, Scaling) {
    // R_z(y, w) = y^{2z} R_z(1, yw)
    Gen g(31);
    for (int i = 0; i < 50; ++i) {
        const cplx z = g.complex(0.05, 3.0, -0.5, 0.5);
        const double y = g.uniform(0.5, 20.0);
        const cplx w = g.complex(0.2, 5.0, -0.3, 0.3);
        const cplx lhs = direct(z, y, w);
        const cplx rhs = std::pow(y, 2.0 * z) * direct(z, 1.0, y * w);
        EXPECT_LE(rel_diff(lhs, rhs), 1e-8) << z << " " << y << " " << w;
    }
}

TEST(RaabeProperty, SymmetryForRealArguments) {
    Gen g(37);
    for (int i = 0; i < 50; ++i) {
        const cplx z = g.uniform(0.1, 3.0);
        const double y = g.uniform(0.3, 4.0);
        const double w = g.uniform(0.3, 4.0);
        EXPECT_LE(raabe_symmetry_check(z, y, w), 1e-7) << z << " " << y << " " << w;
    }
}

TEST(RaabeSymmetry, NamedCases) {
    EXPECT_LE(raabe_symmetry_check(0.7, 2.0, 3.0), 1e-7);
    EXPECT_LE(raabe_symmetry_check(2.0, 5.0, 1.0), 1e-8);
    EXPECT_THROW(raabe_symmetry_check(1.0, 1.0, -1.0), DomainError);
}

TEST(RaabeAsymptotic, HalfIntegerOrderVanishes) {
    for (double z : {0.5, 1.5, 2.5}) {
        const AsymptoticValue a = raabe_asymptotic(z, 10.0, 1.0, 4);
        EXPECT_EQ(a.value, cplx(0.0));
    }
}

TEST(RaabeAsymptotic, TruncationError) {
    // terms Gamma(2z+2n)/(yw)^{2n} grow once 2n exceeds about yw
    EXPECT_THROW(raabe_asymptotic(1.0, 2.0, 1.0, 10), TruncationError);
    try {
        raabe_asymptotic(1.0, 2.0, 1.0, 10);
    } catch (const TruncationError& e) {
        EXPECT_GE(e.optimal_terms, 1);
        EXPECT_LT(e.optimal_terms, 10);
    }
}

TEST(RaabeAsymptotic, AgreesWithDirectAtLargeFrequency) {
    const AsymptoticValue a = raabe_asymptotic(1.0, 50.0, 1.0, 3);
    const cplx exact = raabe_closed_integer(1, 50.0, 1.0);
    EXPECT_LE(std::abs(a.value - exact), 2.0 * a.error_estimate);
    EXPECT_LE(rel_diff(raabe_asymptotic(1.0, 50.0, 1.0, 8).value, exact), 1e-9);
    const AsymptoticValue b = raabe_asymptotic(0.7, 40.0, 1.5, 4);
    EXPECT_LE(std::abs(b.value - direct(0.7, 40.0, 1.5)), 2.0 * b.error_estimate + 1e-15);
}

TEST(RaabeDirect, HalfIntegerOrderDecaysExponentially) {
    const double r20 = std::abs(direct(0.5, 20.0, 1.0));
    const double r40 = std::abs(direct(0.5, 40.0, 1.0));
    EXPECT_GT(r20, 0.0);
    EXPECT_LT(r40, 1e-3 * r20);
}

TEST(RaabeSum, MatchesClosedForm) {
    for (cplx z : {cplx(0.5), cplx(0.3), cplx(1.7), cplx(0.8, 0.3)})
        for (cplx w : {cplx(1.0), cplx(2.0), cplx(0.7, 0.2)}) {
            const SeriesValue s = raabe_sum(z, w);
            EXPECT_LE(rel_diff(s.value, raabe_sum_closed(z, w)), 1e-8) << z << " " << w;
        }
}

TEST(RaabeSum, ClosedFormAtHalfOrder) {
    // at z = 1/2 the cos term drops and the shift term is 1/w^2
    const cplx w = 2.0;
    const cplx zetas = hurwitz_zeta(2.0, I * w) + hurwitz_zeta(2.0, -I * w);
    EXPECT_LE(rel_diff(raabe_sum_closed(0.5, w), 0.25 * (zetas + 1.0 / (w * w))), 1e-14);
}

TEST(RaabeSum, ClosedFormLimitAtZero) {
    // z = 2^-k keeps s = 1 + 2z exact; the 1/z terms would amplify its rounding otherwise
    for (cplx w : {cplx(1.0), cplx(3.0, 1.0)}) {
        const double h = std::ldexp(1.0, -13);
        EXPECT_LE(rel_diff(raabe_sum_closed(std::ldexp(1.0, -20), w), raabe_sum_closed_at_zero(w)), 1e-5) << w;
        const cplx extrapolated =
            (8.0 * raabe_sum_closed(h, w) - 6.0 * raabe_sum_closed(2.0 * h, w) + raabe_sum_closed(4.0 * h, w)) / 3.0;
        EXPECT_LE(rel_diff(extrapolated, raabe_sum_closed_at_zero(w)), 1e-8) << w;
    }
    EXPECT_THROW(raabe_sum_closed(0.0, 1.0), DomainError);
}

TEST(RaabeIntegral, MatchesClosedForm) {
    const IdentityCheckResult r = raabe_integral_check(0.5, 1.0);
    EXPECT_LE(rel_diff(r.lhs, r.rhs), 1e-8);
    EXPECT_LE(rel_diff(r.rhs, -0.25), 1e-15);
    EXPECT_EQ(r.status, Status::pass);
    const IdentityCheckResult c = raabe_integral_check(cplx(0.7, 0.2), 1.5);
    EXPECT_EQ(c.status, Status::pass);
}

TEST(Dgkm, DigammaEvaluation) {
    const IdentityCheckResult r = dgkm_identity(2.0 * pi);
    EXPECT_NEAR(r.rhs.real(), -0.5 * 0.094650320622476977272, 1e-15);
    EXPECT_LE(rel_diff(r.lhs, r.rhs), 1e-12);
    for (cplx u : {cplx(0.5), cplx(3.0), cplx(1.0, 1.0)}) {
        const IdentityCheckResult q = dgkm_identity(u);
        EXPECT_LE(rel_diff(q.lhs, q.rhs), 1e-12) << u;
    }
    EXPECT_THROW(dgkm_identity(-1.0), DomainError);
}

TEST(Dgkm, AgreesWithLimitOfSummationLaw) {
    // DGKM is the z -> 0 case of the summation law with w = u/(2 pi)
    const cplx u = 3.0;
    EXPECT_LE(rel_diff(dgkm_identity(u).rhs, raabe_sum_closed_at_zero(u / (2.0 * pi))), 1e-14);
}
