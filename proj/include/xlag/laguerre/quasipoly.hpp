#pragma once

#include <cmath>

#include "xlag/error.hpp"
#include "xlag/exactmath/poly.hpp"

namespace xlag {

/// z^a * exp(s z / 2) * P(z) with rational a and s = +-1. Closed under d/dz.
struct QuasiPoly {
    Rational zpower;
    int expsign = 1;
    Poly poly;

    friend bool operator==(const QuasiPoly&, const QuasiPoly&) = default;

    long double operator()(long double z) const {
        return std::pow(z, static_cast<long double>(zpower.to_long_double())) * std::exp(expsign * z / 2) *
               poly.eval_real(z);
    }
};

/// d/dz[z^a e^{sz/2} P] = z^{a-1} e^{sz/2} (aP + (s/2) z P + z P').
inline QuasiPoly quasipoly_diff(const QuasiPoly& q) {
    const Poly zp = q.poly.shifted_up(1);
    Poly next = q.poly * q.zpower + zp * Rational(q.expsign, 2) + q.poly.derivative().shifted_up(1);
    return {q.zpower - Rational(1), q.expsign, std::move(next)};
}

/// Boundary behaviour classes of a seed on the positive half-line.
enum class EndpointClass { I, II, III };

struct EndpointBehavior {
    EndpointClass cls;
    int sign_at_zero;      ///< sign of the lowest nonzero coefficient of P
    int sign_at_infinity;  ///< sign of the leading coefficient of P
};

/// Classifies by the gauge exponents: I vanishes at 0+ and diverges at
/// infinity, II the reverse, III diverges at both. Signs are reported as
/// computed; overall-sign normalization is left to the caller.
inline EndpointBehavior endpoint_class(const QuasiPoly& q) {
    if (q.poly.is_zero()) throw Unclassifiable("zero function has no endpoint class");
    const int a = q.zpower.sign();
    if (a == 0) throw Unclassifiable("zpower = 0: behaviour at the origin is not a limit of type I/II/III");
    EndpointClass cls;
    if (a > 0 && q.expsign > 0) cls = EndpointClass::I;
    else if (a < 0 && q.expsign < 0) cls = EndpointClass::II;
    else if (a < 0 && q.expsign > 0) cls = EndpointClass::III;
    else throw Unclassifiable("function vanishes at both ends");
    const int s0 = q.poly.coeff(*q.poly.valuation()).sign();
    return {cls, s0, q.poly.leading().sign()};
}

inline const char* to_string(EndpointClass c) {
    switch (c) {
    case EndpointClass::I: return "I";
    case EndpointClass::II: return "II";
    case EndpointClass::III: return "III";
    }
    return "?";
}

} // namespace xlag
