#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "xlag/exactmath/combinatorics.hpp"
#include "xlag/laguerre/laguerre.hpp"
#include "xlag/laguerre/quasipoly.hpp"
#include "xlag/laguerre/seeds.hpp"

using namespace xlag;

namespace {

const Poly z = Poly::z();

Rational r(long p, long q = 1) { return Rational(p, q); }

Poly c(const Rational& v) { return Poly::constant(v); }

} // namespace

TEST(Laguerre, LowOrderExamples) {
    const Rational a(7, 3);
    EXPECT_EQ(laguerre(0, a), c(1));
    EXPECT_EQ(laguerre(1, a), c(a + r(1)) - z);
    EXPECT_EQ(laguerre(3, r(3, 2))(r(0)), r(105, 16));
    EXPECT_TRUE(laguerre(-1, a).is_zero());
}

TEST(Laguerre, NegatedArgumentExamples) {
    const Rational a(7, 3);
    EXPECT_EQ(laguerre_negated_arg(1, a), c(a + r(1)) + z);
    EXPECT_EQ(laguerre_negated_arg(0, a), c(1));
    EXPECT_EQ(laguerre_negated_arg(2, r(3, 2)), z * z / r(2) + r(7, 2) * z + c(r(35, 8)));
}

TEST(Laguerre, MatchesThreeTermRecurrence) {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        const Rational a = oracle::random_rational(rng, 15, 4);
        for (int n = 0; n <= 12; ++n) EXPECT_EQ(laguerre(n, a), oracle::laguerre_recurrence(n, a)) << n << " " << a.to_string();
    }
}

TEST(Laguerre, ValueAtOriginAndLeadingCoefficient) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const Rational a = oracle::random_rational(rng, 15, 4);
        const int n = trial % 10;
        const Poly p = laguerre(n, a);
        EXPECT_EQ(p(r(0)), pochhammer(a + r(1), static_cast<unsigned>(n)) / Rational(factorial(static_cast<unsigned>(n))));
        const Rational lead = Rational(1) / Rational(factorial(static_cast<unsigned>(n)));
        EXPECT_EQ(p.leading(), n % 2 == 0 ? lead : -lead);
    }
}

// z y'' + (a + 1 - z) y' + n y = 0, including non-classical parameters.
TEST(Laguerre, SatisfiesLaguerreEquation) {
    for (int n = 0; n <= 10; ++n) {
        for (const Rational& a : {r(1, 2), r(5, 2), r(-7, 2), r(-3)}) {
            const Poly y = laguerre(n, a);
            const Poly residual = z * diff(diff(y)) + (c(a + r(1)) - z) * diff(y) + y * r(n);
            EXPECT_TRUE(residual.is_zero()) << n << " " << a.to_string();
        }
    }
}

TEST(Isotonic, SpectrumExamples) {
    // omega (2 nu + alpha + 1)
    EXPECT_EQ(isotonic_spectrum(IsotonicParams::from_alpha(r(3, 2), r(1)), 0), r(5, 2));
    EXPECT_EQ(isotonic_spectrum(IsotonicParams::from_alpha(r(3, 2), r(1)), 1), r(9, 2));
    EXPECT_EQ(isotonic_spectrum(IsotonicParams::from_alpha(r(1, 2), r(2)), 0), r(3));
    EXPECT_EQ(isotonic_spectrum(IsotonicParams::from_alpha(r(5, 2), r(1)), 0), r(7, 2));
    EXPECT_EQ(IsotonicParams::from_l(r(1), r(1)).alpha(), r(3, 2));
    EXPECT_EQ(IsotonicParams::from_l(r(1), r(1)).centrifugal(), r(2));
}

TEST(Isotonic, RejectsOutOfRangeParameters) {
    EXPECT_THROW(IsotonicParams::from_alpha(r(1, 4), r(1)), SpecInvalid);
    EXPECT_THROW(IsotonicParams::from_alpha(r(3, 2), r(0)), SpecInvalid);
    EXPECT_THROW(IsotonicParams::from_l(r(-1), r(1)), SpecInvalid);
}

TEST(Seeds, TypeIExample) {
    const Seed s = make_seed({SeedKind::TypeI, 1}, r(3, 2));
    EXPECT_EQ(s.function.poly, z + c(r(5, 2)));
    EXPECT_EQ(s.function.zpower, r(1));
    EXPECT_EQ(s.function.expsign, 1);
    EXPECT_EQ(s.energy.value, -(r(3, 2) + r(3)));
}

TEST(Seeds, TypeIIExample) {
    const Seed s = make_seed({SeedKind::TypeII, 1}, r(5, 2));
    EXPECT_EQ(s.function.poly, c(r(-3, 2)) - z);
    // -(alpha' - 1/2)/2 with alpha' = 5/2.
    EXPECT_EQ(s.function.zpower, r(-1));
    EXPECT_EQ(s.function.expsign, -1);
    EXPECT_EQ(s.energy.value, -(r(5, 2) - r(3)));
}

TEST(Seeds, RejectsDegenerateIndexAndSmallAlpha) {
    EXPECT_THROW(make_seed({SeedKind::TypeI, 0}, r(3, 2)), SpecInvalid);
    EXPECT_THROW(make_seed({SeedKind::TypeII, -2}, r(3, 2)), SpecInvalid);
    EXPECT_THROW(make_seed({SeedKind::TypeI, 1}, r(1, 4)), SpecInvalid);
}

TEST(Seeds, TypeIIAdmissibilityThreshold) {
    EXPECT_TRUE(seed_admissible({SeedKind::TypeI, 5}, r(1, 2)));
    EXPECT_TRUE(seed_admissible({SeedKind::TypeII, 2}, r(5, 2)));
    EXPECT_FALSE(seed_admissible({SeedKind::TypeII, 2}, r(3, 2)));
    EXPECT_FALSE(seed_admissible({SeedKind::TypeII, 2}, r(2)));
}

// Each seed solves -phi'' + V_{l'} phi = E phi in x, with z = x^2/2 (omega = 1).
TEST(Seeds, SolveSchrodingerEquationNumerically) {
    for (const Rational& ap : {r(3, 2), r(7, 2), r(11, 2)}) {
        const long double lp = ap.to_long_double() - 0.5L;
        for (auto kind : {SeedKind::TypeI, SeedKind::TypeII}) {
            for (int m = 1; m <= 3; ++m) {
                const Seed s = make_seed({kind, m}, ap);
                auto phi = [&](long double x) { return s.function(x * x / 2); };
                for (long double x : {0.7L, 1.3L, 2.1L}) {
                    const long double h = 1e-4L;
                    const long double d2 = (phi(x + h) - 2 * phi(x) + phi(x - h)) / (h * h);
                    const long double v = x * x / 4 + lp * (lp + 1) / (x * x);
                    const long double lhs = -d2 + v * phi(x);
                    const long double rhs = s.energy.value.to_long_double() * phi(x);
                    const long double scale = std::fabs(d2) + std::fabs(v * phi(x)) + std::fabs(rhs);
                    EXPECT_NEAR(static_cast<double>(lhs), static_cast<double>(rhs), 1e-6 * static_cast<double>(scale));
                }
            }
        }
    }
}

TEST(QuasiPoly, DiffExamples) {
    const QuasiPoly a{r(0), -1, c(1)};
    const QuasiPoly da = quasipoly_diff(a);
    EXPECT_EQ(da, (QuasiPoly{r(-1), -1, -z / r(2)}));
    EXPECT_EQ(quasipoly_diff(QuasiPoly{r(1), 1, c(1)}), (QuasiPoly{r(0), 1, c(1) + z / r(2)}));
    EXPECT_EQ(quasipoly_diff(da), (QuasiPoly{r(-2), -1, z * z / r(4)}));
}

TEST(QuasiPoly, DiffAgreesWithCentralDifference) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const QuasiPoly q{oracle::random_rational(rng, 7, 4), trial % 2 == 0 ? 1 : -1, oracle::random_poly(rng, 4)};
        const QuasiPoly dq = quasipoly_diff(q);
        for (long double x : {0.5L, 1.25L, 3.0L}) {
            const long double h = 1e-5L;
            const long double fd = (q(x + h) - q(x - h)) / (2 * h);
            const long double exact = dq(x);
            EXPECT_NEAR(static_cast<double>(fd), static_cast<double>(exact), 1e-6 * (1 + std::fabs(static_cast<double>(exact))));
        }
    }
}

TEST(QuasiPoly, EndpointClassification) {
    const auto i = endpoint_class(make_seed({SeedKind::TypeI, 2}, r(5, 2)).function);
    EXPECT_EQ(i.cls, EndpointClass::I);
    EXPECT_EQ(i.sign_at_zero, 1);
    EXPECT_EQ(i.sign_at_infinity, 1);
    const auto ii = endpoint_class(make_seed({SeedKind::TypeII, 1}, r(5, 2)).function);
    EXPECT_EQ(ii.cls, EndpointClass::II);
    EXPECT_EQ(endpoint_class(QuasiPoly{r(-1, 2), 1, c(1)}).cls, EndpointClass::III);
    EXPECT_STREQ(to_string(EndpointClass::III), "III");
}

TEST(QuasiPoly, UnclassifiableCases) {
    EXPECT_THROW(endpoint_class(QuasiPoly{r(0), 1, c(1)}), Unclassifiable);
    EXPECT_THROW(endpoint_class(QuasiPoly{r(1, 2), -1, c(1)}), Unclassifiable);
    EXPECT_THROW(endpoint_class(QuasiPoly{r(1, 2), 1, Poly{}}), Unclassifiable);
}
