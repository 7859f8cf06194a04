#pragma once

#include <vector>

#include "xlag/error.hpp"
#include "xlag/exactmath/combinatorics.hpp"
#include "xlag/exactmath/poly.hpp"

namespace xlag {

/// Generalized Laguerre polynomial L_n^{(a)}(z) from the explicit series
///   sum_j (a+j+1)_{n-j} / (n-j)! * (-z)^j / j!,
/// valid for any rational a (negative parameters included). A negative
/// degree yields the zero polynomial.
inline Poly laguerre(int n, const Rational& a) {
    if (n < 0) return {};
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const unsigned rest = static_cast<unsigned>(n - j);
        Rational term = pochhammer(a + Rational(j + 1), rest);
        term /= Rational(factorial(rest) * factorial(static_cast<unsigned>(j)));
        c[static_cast<std::size_t>(j)] = (j % 2 == 0) ? term : -term;
    }
    return Poly(std::move(c));
}

/// L_n^{(a)}(-z).
inline Poly laguerre_negated_arg(int n, const Rational& a) { return laguerre(n, a).negated_argument(); }

/// Parameters of the isotonic oscillator V_l(x) = omega^2 x^2 / 4 + l(l+1)/x^2.
class IsotonicParams {
public:
    static IsotonicParams from_l(const Rational& l, const Rational& omega) {
        return IsotonicParams(l + Rational(1, 2), omega);
    }

    static IsotonicParams from_alpha(const Rational& alpha, const Rational& omega) {
        return IsotonicParams(alpha, omega);
    }

    const Rational& alpha() const { return alpha_; }
    const Rational& omega() const { return omega_; }
    Rational l() const { return alpha_ - Rational(1, 2); }

    /// l(l+1), the centrifugal strength.
    Rational centrifugal() const { return l() * (l() + Rational(1)); }

    friend bool operator==(const IsotonicParams&, const IsotonicParams&) = default;

private:
    IsotonicParams(Rational alpha, Rational omega) : alpha_(std::move(alpha)), omega_(std::move(omega)) {
        if (alpha_ < Rational(1, 2)) throw SpecInvalid("alpha must be >= 1/2 (l >= 0), got " + alpha_.to_string());
        if (omega_.sign() <= 0) throw SpecInvalid("omega must be positive, got " + omega_.to_string());
    }

    Rational alpha_;
    Rational omega_;
};

/// E_nu = omega (2 nu + alpha + 1).
inline Rational isotonic_spectrum(const IsotonicParams& p, unsigned nu) {
    return p.omega() * (Rational(2 * static_cast<long>(nu)) + p.alpha() + Rational(1));
}

} // namespace xlag
