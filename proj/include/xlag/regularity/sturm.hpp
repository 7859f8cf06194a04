#pragma once

#include <optional>
#include <vector>

#include "xlag/error.hpp"
#include "xlag/exactmath/poly.hpp"
#include "xlag/wronskian/compute_g.hpp"

namespace xlag {

/// Square-free part p / gcd(p, p').
inline Poly square_free_part(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial("square-free part of the zero polynomial");
    const Poly d = gcd(p, p.derivative());
    return exact_quotient(p, d);
}

/// Canonical Sturm chain of the square-free part of p:
///   p0 = sqfree(p), p1 = p0', p_{i+1} = -rem(p_{i-1}, p_i),
/// ending at a nonzero constant.
inline std::vector<Poly> sturm_sequence(const Poly& p) {
    std::vector<Poly> chain{square_free_part(p)};
    if (*chain[0].degree() == 0) return chain;
    chain.push_back(chain[0].derivative());
    while (true) {
        Poly r = -divmod(chain[chain.size() - 2], chain.back()).remainder;
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

/// Sign changes along the chain evaluated at x, zeros skipped.
inline int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
    int changes = 0;
    int last = 0;
    for (const Poly& p : chain) {
        const int s = p(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Sign changes at +infinity, read off the leading coefficients.
inline int sign_variations_at_infinity(const std::vector<Poly>& chain) {
    int changes = 0;
    int last = 0;
    for (const Poly& p : chain) {
        const int s = p.leading().sign();
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Number of distinct real roots of p in the open interval (lo, hi); an
/// absent hi means +infinity.
inline int count_roots_open_interval(const Poly& p, const Rational& lo, const std::optional<Rational>& hi = std::nullopt) {
    if (p.is_zero()) throw ZeroPolynomial("root count of the zero polynomial");
    if (p(lo).is_zero()) throw BoundaryRoot("lower endpoint " + lo.to_string() + " is a root of " + p.to_string());
    if (hi && *hi <= lo) return 0;
    const auto chain = sturm_sequence(p);
    if (!hi) return sign_variations(chain, lo) - sign_variations_at_infinity(chain);
    // The variation difference counts roots in (lo, hi].
    const int n = sign_variations(chain, lo) - sign_variations(chain, *hi);
    return p(*hi).is_zero() ? n - 1 : n;
}

struct RegularityCertificate {
    int root_count_positive_axis = 0;
    int sign_at_zero = 0;
    int sign_at_infinity = 0;
    bool regular = false;
    bool admissible = false;
    int sturm_sequence_length = 0;
    int repeated_root_degree = 0;  ///< degree of gcd(g, g'), 0 when square-free

    bool same_sign_at_ends() const { return sign_at_zero != 0 && sign_at_zero == sign_at_infinity; }

    friend bool operator==(const RegularityCertificate&, const RegularityCertificate&) = default;
};

/// Exact certificate that g has no zero on (0, infinity). A root at the
/// origin itself is factored out before counting, and makes g irregular.
inline RegularityCertificate certify(const Poly& g, bool admissible) {
    if (g.is_zero()) throw ZeroPolynomial("cannot certify the zero polynomial");
    RegularityCertificate c;
    c.admissible = admissible;
    c.sign_at_zero = g.constant_term().sign();
    c.sign_at_infinity = g.leading().sign();
    const Poly reduced = divexact_zpow(g, *g.valuation());
    const auto chain = sturm_sequence(reduced);
    c.sturm_sequence_length = static_cast<int>(chain.size());
    c.root_count_positive_axis = sign_variations(chain, Rational(0)) - sign_variations_at_infinity(chain);
    c.repeated_root_degree = static_cast<int>(*gcd(g, g.derivative()).degree());
    c.regular = c.root_count_positive_axis == 0 && c.sign_at_zero != 0;
    return c;
}

inline RegularityCertificate certify(const GReport& report) { return certify(report.g, report.admissible); }

} // namespace xlag
