#pragma once

#include "xlag/laguerre/laguerre.hpp"
#include "xlag/spectral/real_poly.hpp"
#include "xlag/wronskian/compute_g.hpp"

namespace xlag {

/// V2(x) = V_l(x) + V_rat(z) + C with z = omega x^2 / 2, where
///   V_rat = -2 omega [ g'/g + 2z (g''/g - (g'/g)^2) ] = N(z) / g(z)^2,
///   N     = -2 omega [ g' g + 2z (g'' g - g'^2) ].
class ExtendedPotential {
public:
    ExtendedPotential(IsotonicParams base, Poly g, Rational shift, bool irregular)
        : base_(std::move(base)), g_(std::move(g)), shift_(std::move(shift)), irregular_(irregular) {
        const Poly gd = g_.derivative();
        const Poly gdd = gd.derivative();
        numerator_ = (gd * g_ + (gdd * g_ - gd * gd).shifted_up(1) * Rational(2)) * (Rational(-2) * base_.omega());
        denominator_ = g_ * g_;
        num_real_ = RealPoly(numerator_);
        den_real_ = RealPoly(denominator_);
        omega_ = base_.omega().to_long_double();
        centrifugal_ = base_.centrifugal().to_long_double();
        shift_real_ = shift_.to_long_double();
    }

    const IsotonicParams& base() const { return base_; }
    const Poly& g() const { return g_; }
    const Rational& shift() const { return shift_; }
    const Poly& rational_numerator() const { return numerator_; }
    const Poly& rational_denominator() const { return denominator_; }

    /// Set when g was not certified nodeless; values near its roots blow up.
    bool irregular_warning() const { return irregular_; }

    long double z_of_x(long double x) const { return omega_ * x * x / 2; }

    long double rational_part(long double z) const { return num_real_(z) / den_real_(z); }

    long double isotonic_part(long double x) const { return omega_ * omega_ * x * x / 4 + centrifugal_ / (x * x); }

    long double operator()(long double x) const {
        return isotonic_part(x) + rational_part(z_of_x(x)) + shift_real_;
    }

private:
    IsotonicParams base_;
    Poly g_;
    Rational shift_;
    bool irregular_;
    Poly numerator_;
    Poly denominator_;
    RealPoly num_real_;
    RealPoly den_real_;
    long double omega_ = 0;
    long double centrifugal_ = 0;
    long double shift_real_ = 0;
};

/// Shift C = (k - 2q) omega.
inline ExtendedPotential build_potential(const ExtensionSpec& spec, const GReport& report) {
    return ExtendedPotential(spec.final_params(), report.g, Rational(spec.k() - 2 * spec.q()) * spec.omega(),
                             !report.regular);
}

} // namespace xlag
