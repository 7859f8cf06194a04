#pragma once

#include <optional>
#include <span>
#include <vector>

#include "xlag/exactmath/combinatorics.hpp"
#include "xlag/exactmath/poly.hpp"
#include "xlag/laguerre/laguerre.hpp"
#include "xlag/wronskian/extension_spec.hpp"
#include "xlag/wronskian/poly_matrix.hpp"

namespace xlag {

/// The k x k matrix whose determinant, divided by z^{(k-q)(k-q-1)}, is g.
/// Index lists are taken as given (unsorted input permutes columns).
/// Laguerre entries with negative degree are the zero polynomial.
inline PolyMatrix gamma_matrix(const Rational& alpha_prime, std::span<const int> mI, std::span<const int> mII) {
    const int q = static_cast<int>(mI.size());
    const int k = q + static_cast<int>(mII.size());
    std::vector<int> m(mI.begin(), mI.end());
    m.insert(m.end(), mII.begin(), mII.end());

    PolyMatrix g(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            const int mj = m[static_cast<std::size_t>(j - 1)];
            const bool upper = i <= q + 1;
            Poly entry;
            if (j <= q) {
                const int n = upper ? mj - i + 1 : mj - q;
                entry = laguerre_negated_arg(n, alpha_prime + Rational(i - 1));
            } else {
                const Rational neg_param = -alpha_prime - Rational(i - 1);
                const Rational mj1(mj + 1);
                Rational factor;
                int n;
                if (upper) {
                    factor = pochhammer(mj1, static_cast<unsigned>(i - 1));
                    n = mj + i - 1;
                } else {
                    factor = pochhammer(mj1, static_cast<unsigned>(q)) *
                             pochhammer(Rational(mj + q + 2 - i) - alpha_prime, static_cast<unsigned>(i - q - 1));
                    n = mj + q;
                }
                entry = (laguerre(n, neg_param) * factor).shifted_up(static_cast<std::size_t>(k - i));
            }
            g(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = std::move(entry);
        }
    }
    return g;
}

inline PolyMatrix build_gamma_matrix(const ExtensionSpec& spec) {
    return gamma_matrix(spec.alpha_prime(), spec.mI(), spec.mII());
}

/// Power of z removed from det(Gamma) to obtain g.
inline std::size_t gamma_z_power(int k, int q) { return static_cast<std::size_t>((k - q) * (k - q - 1)); }

struct ClosedForm {
    long mu;
    long sigma;
    Rational lead;
};

/// Degree, sign exponent and leading coefficient of g:
///   mu    = sum m_i - q(q-1)/2 - (k-q)(k-q-1)/2 + q(k-q)
///   sigma = sum_{i>q} m_i + q(k-q)
///   lead  = (-1)^sigma Delta(mI) Delta(mII) / (m_1! ... m_k!)
inline ClosedForm predict_mu_sigma_lead(const ExtensionSpec& spec) {
    const long k = spec.k();
    const long q = spec.q();
    long sum_all = 0;
    long sum_II = 0;
    for (int m : spec.mI()) sum_all += m;
    for (int m : spec.mII()) {
        sum_all += m;
        sum_II += m;
    }
    const long mu = sum_all - q * (q - 1) / 2 - (k - q) * (k - q - 1) / 2 + q * (k - q);
    const long sigma = sum_II + q * (k - q);
    BigInt den = 1;
    for (int m : spec.indices()) den *= factorial(static_cast<unsigned>(m));
    Rational lead(vandermonde(spec.mI()) * vandermonde(spec.mII()), den);
    if (sigma % 2 != 0) lead = -lead;
    return {mu, sigma, lead};
}

/// Constant term g(0) in the alpha' form
///   lead * prod_{i<=q} (a'+i)_{m_i-i+1} * prod_{i>q} (a'-m_i)_{m_i+2q+1-i}.
inline Rational predict_const(const ExtensionSpec& spec) {
    const auto m = spec.indices();
    const int q = spec.q();
    const int k = spec.k();
    const Rational ap = spec.alpha_prime();
    Rational value = predict_mu_sigma_lead(spec).lead;
    for (int i = 1; i <= q; ++i) {
        const int mi = m[static_cast<std::size_t>(i - 1)];
        value *= pochhammer(ap + Rational(i), static_cast<unsigned>(mi - i + 1));
    }
    for (int i = q + 1; i <= k; ++i) {
        const int mi = m[static_cast<std::size_t>(i - 1)];
        value *= pochhammer(ap - Rational(mi), static_cast<unsigned>(mi + 2 * q + 1 - i));
    }
    return value;
}

/// Everything known about g for one extension: the polynomial itself, the
/// closed-form predictions, and (once certified) its regularity.
struct GReport {
    Poly g;
    long mu_predicted = 0;
    std::optional<long> mu_computed;
    long sigma = 0;
    Rational lead_predicted;
    Rational lead_computed;
    Rational const_predicted;
    Rational const_computed;
    bool divisible = false;
    bool regular = false;  ///< set from the regularity certificate
    bool admissible = false;

    bool predictions_match() const {
        return divisible && mu_computed && *mu_computed == mu_predicted && lead_computed == lead_predicted &&
               const_computed == const_predicted;
    }

    friend bool operator==(const GReport&, const GReport&) = default;
};

/// g(z) = z^{-(k-q)(k-q-1)} det Gamma, by Bareiss elimination and exact
/// division. Throws NotDivisible if the low coefficients do not vanish.
inline GReport compute_g(const ExtensionSpec& spec) {
    GReport r;
    const Poly det = bareiss_determinant(build_gamma_matrix(spec));
    r.g = divexact_zpow(det, gamma_z_power(spec.k(), spec.q()));
    r.divisible = true;
    if (auto d = r.g.degree()) r.mu_computed = static_cast<long>(*d);
    r.lead_computed = r.g.leading();
    r.const_computed = r.g.constant_term();
    const ClosedForm cf = predict_mu_sigma_lead(spec);
    r.mu_predicted = cf.mu;
    r.sigma = cf.sigma;
    r.lead_predicted = cf.lead;
    r.const_predicted = predict_const(spec);
    r.admissible = spec.admissible();
    return r;
}

} // namespace xlag
