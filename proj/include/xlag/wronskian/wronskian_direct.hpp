#pragma once

#include "xlag/laguerre/quasipoly.hpp"
#include "xlag/laguerre/seeds.hpp"
#include "xlag/wronskian/compute_g.hpp"

namespace xlag {

/// Factored form of the Crum Wronskian in x:
///   W(phi_1..phi_k | x) = (omega x)^{omega_x_power} z^{z_power} e^{exp_half * z/2} g(z).
/// The prefactors are bookkeeping only; g is what downstream code uses.
struct WronskianFactorization {
    int omega_x_power = 0;
    Rational z_power;
    int exp_half = 0;
    Poly seed_determinant;  ///< det of the polynomial parts of the z-derivative matrix
    Poly g;
};

/// Direct route to g: differentiate each gauge-factored seed in z up to
/// order k-1, take the determinant of the polynomial parts, and strip the
/// z-power left over after pulling the gauges out of the columns. The
/// x -> z change of variables contributes only (omega x)^{k(k-1)/2}.
/// Throws OracleMismatch if the result differs from compute_g.
inline WronskianFactorization wronskian_direct(const ExtensionSpec& spec, const GReport& report) {
    const int k = spec.k();
    const int q = spec.q();
    if (k > 5) throw SpecInvalid("direct Wronskian limited to k <= 5, got k = " + std::to_string(k));

    const Rational ap = spec.alpha_prime();
    PolyMatrix w(static_cast<std::size_t>(k));
    Rational gauge_power;
    int exp_half = 0;
    std::size_t col = 0;
    for (const SeedSpec& s : spec.seeds()) {
        QuasiPoly f = make_seed(s, ap).function;
        gauge_power += f.zpower;
        exp_half += f.expsign;
        for (int row = 0; row < k; ++row) {
            w(static_cast<std::size_t>(row), col) = f.poly;
            f = quasipoly_diff(f);
        }
        ++col;
    }

    WronskianFactorization out;
    out.omega_x_power = k * (k - 1) / 2;
    out.exp_half = exp_half;
    out.seed_determinant = bareiss_determinant(std::move(w));

    // Row j carries z^{-j}: the determinant sits under z^{sum a_i - k(k-1)/2}.
    // Matching z^{-q(k-q)} (chi_I)^q (chi_II)^{k-q} g leaves z^e with
    // e = k(k-1)/2 - q(k-q) between the seed determinant and g.
    const int e = k * (k - 1) / 2 - q * (k - q);
    out.z_power = gauge_power - Rational(q * (k - q));
    try {
        out.g = divexact_zpow(out.seed_determinant, static_cast<std::size_t>(e));
    } catch (const NotDivisible& ex) {
        throw OracleMismatch(spec.describe() + ": seed Wronskian not divisible by z^" + std::to_string(e) + " (" +
                             ex.what() + ")");
    }
    if (out.g != report.g)
        throw OracleMismatch(spec.describe() + ": direct Wronskian gives " + out.g.to_string() +
                             " but the Gamma determinant gives " + report.g.to_string());
    return out;
}

inline WronskianFactorization wronskian_direct(const ExtensionSpec& spec) {
    return wronskian_direct(spec, compute_g(spec));
}

} // namespace xlag
