#pragma once

#include "xlag/laguerre/laguerre.hpp"
#include "xlag/laguerre/quasipoly.hpp"

namespace xlag {

enum class SeedKind { TypeI, TypeII };

struct SeedSpec {
    SeedKind kind;
    int m;
};

/// Factorization energy in units of omega.
struct SeedEnergy {
    Rational value;
};

struct Seed {
    QuasiPoly function;
    SeedEnergy energy;
};

/// Seed eigenfunctions of V_{l'} obtained from the parameter symmetries:
///   type I : z^{(a'+1/2)/2} e^{ z/2} L_m^{(a')}(-z),  E = -(a'+2m+1)
///   type II: z^{-(a'-1/2)/2} e^{-z/2} L_m^{(-a')}(z),  E = -(a'-2m-1)
inline Seed make_seed(const SeedSpec& spec, const Rational& alpha_prime) {
    if (spec.m < 1) throw SpecInvalid("seed index m must be >= 1, got " + std::to_string(spec.m));
    if (alpha_prime < Rational(1, 2)) throw SpecInvalid("alpha' must be >= 1/2, got " + alpha_prime.to_string());
    const Rational half(1, 2);
    const Rational twice_m_plus_one(2 * spec.m + 1);
    if (spec.kind == SeedKind::TypeI) {
        return {{(alpha_prime + half) / Rational(2), +1, laguerre_negated_arg(spec.m, alpha_prime)},
                {-(alpha_prime + twice_m_plus_one)}};
    }
    return {{-(alpha_prime - half) / Rational(2), -1, laguerre(spec.m, -alpha_prime)},
            {-(alpha_prime - twice_m_plus_one)}};
}

/// A type-II seed is in the disconjugacy sector only when alpha' > m.
inline bool seed_admissible(const SeedSpec& spec, const Rational& alpha_prime) {
    return spec.kind == SeedKind::TypeI || alpha_prime > Rational(spec.m);
}

} // namespace xlag
