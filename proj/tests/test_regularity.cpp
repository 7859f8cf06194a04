#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "xlag/regularity/sturm.hpp"
#include "xlag/wronskian/compute_g.hpp"

using namespace xlag;

namespace {

const Poly z = Poly::z();

Rational r(long p, long q = 1) { return Rational(p, q); }

Poly c(const Rational& v) { return Poly::constant(v); }

const Poly counterexample{r(-1, 8), r(-1, 2), r(1, 2)};

} // namespace

TEST(Sturm, ChainExamples) {
    EXPECT_EQ(sturm_sequence(z + c(r(5, 2))), (std::vector<Poly>{z + c(r(5, 2)), c(1)}));
    EXPECT_EQ(sturm_sequence(z * z - c(1)), (std::vector<Poly>{z * z - c(1), Rational(2) * z, c(1)}));
    const Poly sq = (z - c(1)) * (z - c(1));
    EXPECT_EQ(square_free_part(sq), z - c(1));
    EXPECT_EQ(sturm_sequence(sq).front(), z - c(1));
    EXPECT_EQ(sturm_sequence(c(3)).size(), 1u);
    EXPECT_THROW(sturm_sequence(Poly{}), ZeroPolynomial);
}

TEST(Sturm, RootCountExamples) {
    EXPECT_EQ(count_roots_open_interval(z + c(r(5, 2)), r(0)), 0);
    EXPECT_EQ(count_roots_open_interval(z - c(1), r(0)), 1);
    EXPECT_EQ(count_roots_open_interval(counterexample, r(0)), 1);
    EXPECT_EQ(count_roots_open_interval(counterexample, r(-1)), 2);
}

TEST(Sturm, RootCountEdgeCases) {
    const Poly p = oracle::from_roots({r(1), r(2), r(3)});
    EXPECT_THROW(count_roots_open_interval(p, r(1)), BoundaryRoot);
    EXPECT_EQ(count_roots_open_interval(p, r(0), r(2)), 1);
    EXPECT_EQ(count_roots_open_interval(p, r(0), r(3)), 2);
    EXPECT_EQ(count_roots_open_interval(p, r(5), r(4)), 0);
    EXPECT_EQ(count_roots_open_interval(p * p, r(0)), 3);
    EXPECT_EQ(count_roots_open_interval(z * z + c(1), r(-100)), 0);
}

// Sturm counts against polynomials built from known rational roots.
TEST(SturmProperty, CountsConstructedRoots) {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> nroots(0, 6), mult(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> roots, distinct;
        const int n = nroots(rng);
        for (int i = 0; i < n; ++i) {
            Rational x = oracle::random_rational(rng, 20, 4);
            if (x.is_zero()) x = r(1, 7);
            if (std::find(distinct.begin(), distinct.end(), x) != distinct.end()) continue;
            distinct.push_back(x);
            for (int m = mult(rng); m > 0; --m) roots.push_back(x);
        }
        // An irreducible quadratic factor contributes no real roots.
        Poly p = oracle::from_roots(roots, oracle::random_rational(rng, 5, 3) + r(11, 2));
        if (trial % 2) p = p * (z * z + c(r(1, 3)));
        const int positive = static_cast<int>(std::count_if(distinct.begin(), distinct.end(), [](const Rational& x) { return x.sign() > 0; }));
        EXPECT_EQ(count_roots_open_interval(p, r(0)), positive);
        EXPECT_EQ(count_roots_open_interval(p, r(-1000)), static_cast<int>(distinct.size()));
    }
}

// Sturm counts against a sign-change scan for random well-conditioned cubics.
TEST(SturmProperty, AgreesWithSignScan) {
    std::mt19937 rng(161803);
    std::uniform_int_distribution<int> root(-12, 12);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> roots;
        while (roots.size() < 3) {
            const Rational x(root(rng), 2);
            if (!x.is_zero() && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
        }
        const Poly p = oracle::from_roots(roots);
        const long double bound = oracle::cauchy_bound(p);
        EXPECT_EQ(count_roots_open_interval(p, r(0)), oracle::scan_sign_changes(p, 0, bound, 20000));
    }
}

TEST(Certify, RegularAdmissibleExample) {
    const GReport g = compute_g(ExtensionSpec(r(5, 2), r(1), {1}, {1}));
    const RegularityCertificate cert = certify(g);
    EXPECT_EQ(cert.root_count_positive_axis, 0);
    EXPECT_EQ(cert.sign_at_zero, 1);
    EXPECT_EQ(cert.sign_at_infinity, 1);
    EXPECT_TRUE(cert.regular);
    EXPECT_TRUE(cert.admissible);
    EXPECT_TRUE(cert.same_sign_at_ends());
}

TEST(Certify, CounterexampleIsIrregular) {
    const ExtensionSpec s(r(1, 2), r(1), {}, {2});
    EXPECT_FALSE(s.admissible());
    const GReport g = compute_g(s);
    EXPECT_EQ(g.g, counterexample);
    EXPECT_EQ(g.g, laguerre(2, -s.alpha() - r(1)));
    const RegularityCertificate cert = certify(g);
    EXPECT_EQ(cert.root_count_positive_axis, 1);
    EXPECT_FALSE(cert.regular);
    EXPECT_FALSE(cert.same_sign_at_ends());

    // Roots (1 +- sqrt 2)/2 from the quadratic formula: one on each side of 0.
    const auto roots = oracle::quadratic_roots(0.5L, -0.5L, -0.125L);
    EXPECT_LT(roots.lo, 0);
    EXPECT_GT(roots.hi, 0);
    EXPECT_NEAR(static_cast<double>(roots.hi), (1 + std::sqrt(2.0)) / 2, 1e-15);
}

TEST(Certify, IdentityExtensionIsRegular) {
    const RegularityCertificate cert = certify(c(1), true);
    EXPECT_TRUE(cert.regular);
    EXPECT_EQ(cert.root_count_positive_axis, 0);
    EXPECT_EQ(cert.sturm_sequence_length, 1);
}

TEST(Certify, RootAtOriginAndRepeatedRoots) {
    const RegularityCertificate at_origin = certify(z * (z + c(1)), true);
    EXPECT_EQ(at_origin.root_count_positive_axis, 0);
    EXPECT_FALSE(at_origin.regular);
    const RegularityCertificate repeated = certify((z - c(2)) * (z - c(2)) * (z + c(1)), false);
    EXPECT_EQ(repeated.root_count_positive_axis, 1);
    EXPECT_EQ(repeated.repeated_root_degree, 1);
    EXPECT_FALSE(repeated.regular);
    EXPECT_THROW(certify(Poly{}, true), ZeroPolynomial);
}

// Admissible specs stay nodeless with sign (-1)^sigma at both ends.
TEST(CertifyProperty, AdmissibleSpecsAreRegular) {
    std::mt19937 rng(57721);
    std::uniform_int_distribution<int> md(1, 8), jd(0, 4);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<int> mI, mII;
        for (int i = 0; i < trial % 3; ++i) mI.push_back(md(rng));
        for (int i = 0; i < (trial / 3) % 3; ++i) mII.push_back(md(rng));
        std::sort(mI.begin(), mI.end());
        mI.erase(std::unique(mI.begin(), mI.end()), mI.end());
        std::sort(mII.begin(), mII.end());
        mII.erase(std::unique(mII.begin(), mII.end()), mII.end());
        const int base = mII.empty() ? 1 : mII.back();
        const ExtensionSpec s = ExtensionSpec::from_alpha_prime(Rational(2 * (base + jd(rng)) + 1, 2), r(1), mI, mII);
        const GReport g = compute_g(s);
        const RegularityCertificate cert = certify(g);
        const int expected = g.sigma % 2 == 0 ? 1 : -1;
        EXPECT_TRUE(cert.regular) << s.describe();
        EXPECT_EQ(cert.sign_at_zero, expected) << s.describe();
        EXPECT_EQ(cert.sign_at_infinity, expected) << s.describe();
        EXPECT_EQ(oracle::scan_sign_changes(g.g, 0, oracle::cauchy_bound(g.g), 20000), 0) << s.describe();
    }
}
