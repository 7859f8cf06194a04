#pragma once

#include <span>

#include "xlag/exactmath/rational.hpp"

namespace xlag {

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned n) {
    Rational r(1);
    Rational f = a;
    for (unsigned i = 0; i < n; ++i) {
        r *= f;
        f += Rational(1);
    }
    return r;
}

inline BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Vandermonde product prod_{i<j} (n_j - n_i). Empty and singleton lists give 1.
inline BigInt vandermonde(std::span<const int> ns) {
    BigInt r = 1;
    for (std::size_t i = 0; i < ns.size(); ++i)
        for (std::size_t j = i + 1; j < ns.size(); ++j) r *= static_cast<long>(ns[j]) - static_cast<long>(ns[i]);
    return r;
}

} // namespace xlag
