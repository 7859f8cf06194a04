#pragma once

#include <cmath>

#include "xlag/error.hpp"
#include "xlag/spectral/eop.hpp"
#include "xlag/spectral/real_poly.hpp"

namespace xlag {

/// Unnormalized bound state psi_nu(x) = eta_l(z) y_{mu+nu}(z) / g(z),
/// eta_l = z^{(alpha+1/2)/2} e^{-z/2}, z = omega x^2 / 2.
class Wavefunction {
public:
    Wavefunction(const EOPFamily& fam, const Rational& omega, std::size_t nu)
        : omega_(omega.to_long_double()),
          gauge_power_(((fam.alpha + Rational(1, 2)) / Rational(2)).to_long_double()),
          y_(fam.polys.at(nu)),
          g_(fam.g) {}

    long double operator()(long double x) const {
        const long double z = omega_ * x * x / 2;
        return std::pow(z, gauge_power_) * std::exp(-z / 2) * y_(z) / g_(z);
    }

private:
    long double omega_;
    long double gauge_power_;
    RealPoly y_;
    RealPoly g_;
};

inline Wavefunction wavefunction(const ExtensionSpec& spec, const EOPFamily& fam, std::size_t nu) {
    if (nu >= fam.polys.size()) throw SpecInvalid("wavefunction index nu=" + std::to_string(nu) + " not in family");
    return Wavefunction(fam, spec.omega(), nu);
}

} // namespace xlag
