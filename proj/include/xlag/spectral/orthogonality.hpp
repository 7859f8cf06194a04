#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "xlag/error.hpp"
#include "xlag/spectral/eop.hpp"
#include "xlag/spectral/quadrature.hpp"
#include "xlag/spectral/real_poly.hpp"

namespace xlag {

namespace detail {

/// <y_i, y_j> under z^alpha e^{-z} / g^2 on (0, inf), integrated in t with
/// z = t^2 so the z^alpha endpoint behaviour becomes t^{2 alpha + 1}.
class EOPInnerProduct {
public:
    explicit EOPInnerProduct(const EOPFamily& fam) : alpha_(fam.alpha.to_long_double()), g_(fam.g) {
        for (const Poly& y : fam.polys) ys_.emplace_back(y);
        std::size_t max_deg = 0;
        for (const Poly& y : fam.polys) max_deg = std::max(max_deg, *y.degree());
        // Tail beyond z = t_max^2 is below e^{-80} relative to the bulk.
        const long double z_max = 2.0L * static_cast<long double>(max_deg) + alpha_ + 120.0L;
        t_max_ = std::sqrt(z_max);
    }

    long double integrate(std::size_t i, std::size_t j, long double abs_tol, const GaussRule& rule) const {
        auto f = [&](long double t) {
            const long double z = t * t;
            const long double gz = g_(z);
            return 2 * t * std::pow(z, alpha_) * std::exp(-z) * ys_[i](z) * ys_[j](z) / (gz * gz);
        };
        return integrate_adaptive(f, 0.0L, t_max_, abs_tol, rule).value;
    }

private:
    long double alpha_;
    RealPoly g_;
    std::vector<RealPoly> ys_;
    long double t_max_ = 0;
};

} // namespace detail

/// |<y_i, y_j>| / sqrt(<y_i, y_i> <y_j, y_j>) under the exceptional weight,
/// for polys indexed by nu. Two Gauss orders (20 and 30 points per panel,
/// at least 320 nodes) must agree to 1e-10 relative.
inline double orthogonality_check(const EOPFamily& fam, std::size_t i, std::size_t j) {
    if (i >= fam.polys.size() || j >= fam.polys.size()) throw SpecInvalid("orthogonality index out of range");
    if (i == j) return 1.0;
    static const GaussRule coarse = gauss_legendre(20);
    static const GaussRule fine = gauss_legendre(30);
    const detail::EOPInnerProduct ip(fam);

    auto norm = [&](std::size_t n) {
        // Positive integrand: a fixed-panel pass sets the scale for the adaptive one.
        const long double rough = ip.integrate(n, n, std::numeric_limits<long double>::infinity(), coarse);
        return ip.integrate(n, n, 1e-16L * rough, fine);
    };
    const long double scale = std::sqrt(norm(i) * norm(j));
    const long double a = ip.integrate(i, j, 1e-16L * scale, coarse);
    const long double b = ip.integrate(i, j, 1e-16L * scale, fine);
    if (std::fabs(a - b) > 1e-10L * scale)
        throw QuadratureNonconvergence("inner product <" + std::to_string(i) + "," + std::to_string(j) +
                                       "> differs between Gauss orders by " +
                                       std::to_string(static_cast<double>(std::fabs(a - b) / scale)));
    return static_cast<double>(std::fabs(b) / scale);
}

/// Largest normalized off-diagonal inner product over the whole family.
inline double max_off_diagonal(const EOPFamily& fam) {
    double worst = 0;
    for (std::size_t i = 0; i < fam.polys.size(); ++i)
        for (std::size_t j = i + 1; j < fam.polys.size(); ++j) worst = std::max(worst, orthogonality_check(fam, i, j));
    return worst;
}

} // namespace xlag
