#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "xlag/exactmath/poly.hpp"

namespace xlag {

/// Square matrix of polynomials, row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t size() const { return n_; }

    Poly& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(r1, j), (*this)(r2, j));
    }

    void swap_columns(std::size_t c1, std::size_t c2) {
        for (std::size_t i = 0; i < n_; ++i) std::swap((*this)(i, c1), (*this)(i, c2));
    }

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Poly> a_;
};

/// Determinant by fraction-free Bareiss elimination over Q[z]. Each step
/// divides exactly by the previous pivot, so no rational functions appear.
inline Poly bareiss_determinant(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly::constant(1);
    int sign = 1;
    Poly prev = Poly::constant(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m(r, k).is_zero()) ++r;
            if (r == n) return {};
            m.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_quotient(num, prev);
            }
            m(i, k) = Poly{};
        }
        prev = m(k, k);
    }
    Poly det = m(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

} // namespace xlag
