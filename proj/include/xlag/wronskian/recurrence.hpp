#pragma once

#include "xlag/wronskian/compute_g.hpp"

namespace xlag {

struct OriginRecurrence {
    Rational lhs;  ///< g(0) * g''(0) * (alpha + 1)
    Rational rhs;  ///< (m_k - m_{k-1}) * g'(0) * gbar'(0)
    bool holds() const { return lhs == rhs; }
};

/// Constant-term recurrence when the last two seeds are of type II:
///   g^{(a)}(0) g^{(a+2)}(0) (a+1) = (m_k - m_{k-1}) g^{(a+1)}(0) gbar^{(a+1)}(0)
/// where g^{(a+1)} drops m_k, gbar^{(a+1)} drops m_{k-1}, and g^{(a+2)}
/// drops both. Each reduced spec keeps the same alpha'.
inline OriginRecurrence origin_recurrence(const ExtensionSpec& spec, const Rational& g0) {
    if (spec.k() - spec.q() < 2)
        throw Inapplicable("origin recurrence needs k - q >= 2, got k=" + std::to_string(spec.k()) +
                           " q=" + std::to_string(spec.q()));
    const auto& mII = spec.mII();
    const int mk = mII.back();
    const int mk1 = mII[mII.size() - 2];
    auto without = [&](std::initializer_list<int> drop) {
        std::vector<int> kept;
        for (int m : mII)
            if (std::find(drop.begin(), drop.end(), m) == drop.end()) kept.push_back(m);
        return kept;
    };
    const Rational& a = spec.alpha();
    auto g_at_0 = [&](const Rational& alpha, std::vector<int> reduced) {
        return compute_g(ExtensionSpec(alpha, spec.omega(), spec.mI(), std::move(reduced))).const_computed;
    };
    const Rational g_prime = g_at_0(a + Rational(1), without({mk}));
    const Rational g_bar = g_at_0(a + Rational(1), without({mk1}));
    const Rational g_second = g_at_0(a + Rational(2), without({mk, mk1}));
    return {g0 * g_second * (a + Rational(1)), Rational(mk - mk1) * g_prime * g_bar};
}

inline bool check_origin_recurrence(const ExtensionSpec& spec) {
    return origin_recurrence(spec, compute_g(spec).const_computed).holds();
}

} // namespace xlag
