#pragma once

#include <vector>

#include "xlag/exactmath/poly.hpp"

namespace xlag {

/// Floating-point snapshot of an exact polynomial for repeated evaluation.
class RealPoly {
public:
    RealPoly() = default;
    explicit RealPoly(const Poly& p) {
        c_.reserve(p.coefficients().size());
        for (const Rational& a : p.coefficients()) c_.push_back(a.to_long_double());
    }

    long double operator()(long double z) const {
        long double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    std::size_t size() const { return c_.size(); }

private:
    std::vector<long double> c_;
};

} // namespace xlag
