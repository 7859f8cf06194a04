#pragma once

#include <vector>

#include "xlag/error.hpp"
#include "xlag/exactmath/poly.hpp"
#include "xlag/wronskian/compute_g.hpp"

namespace xlag {

/// Exact null space of a dense rational matrix by reduction to row echelon
/// form. Returns one basis vector per free column.
inline std::vector<std::vector<Rational>> rational_null_space(std::vector<std::vector<Rational>> a, std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const Rational inv = Rational(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = Rational(1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Left-hand side of the exceptional Laguerre equation cleared of g:
///   z g y'' + [(alpha+1-z) g - 2z g'] y' + [(z-alpha) g' + z g'' + nu g] y.
/// nu may be negative when probing degrees below mu.
inline Poly eop_operator(const Rational& alpha, const Poly& g, long nu, const Poly& y) {
    const Poly gd = g.derivative();
    const Poly gdd = gd.derivative();
    const Poly first_coeff = g * Poly{alpha + Rational(1), Rational(-1)} - gd.shifted_up(1) * Rational(2);
    const Poly zero_coeff = gd * Poly{-alpha, Rational(1)} + gdd.shifted_up(1) + g * Rational(nu);
    return (g * y.derivative().derivative()).shifted_up(1) + first_coeff * y.derivative() + zero_coeff * y;
}

/// Polynomial solutions of degree <= max_degree of the equation with
/// eigenvalue -nu, as a basis of the solution space.
inline std::vector<Poly> eop_solution_space(const Rational& alpha, const Poly& g, long nu, std::size_t max_degree) {
    const std::size_t unknowns = max_degree + 1;
    std::vector<Poly> columns;
    std::size_t rows = 0;
    for (std::size_t j = 0; j < unknowns; ++j) {
        columns.push_back(eop_operator(alpha, g, nu, Poly::monomial(1, j)));
        if (auto d = columns.back().degree()) rows = std::max(rows, *d + 1);
    }
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(unknowns));
    for (std::size_t j = 0; j < unknowns; ++j)
        for (std::size_t i = 0; i < rows; ++i) a[i][j] = columns[j].coeff(i);
    std::vector<Poly> out;
    for (auto& v : rational_null_space(std::move(a), unknowns)) out.emplace_back(std::move(v));
    return out;
}

/// The exceptional family y_{mu+nu}, nu = 0..nu_max, each monic.
struct EOPFamily {
    Rational alpha;
    Poly g;
    long mu = 0;
    std::vector<Poly> polys;

    friend bool operator==(const EOPFamily&, const EOPFamily&) = default;
};

inline EOPFamily solve_eop(const Rational& alpha, const Poly& g, int nu_max) {
    if (g.is_zero()) throw ZeroPolynomial("exceptional family needs a nonzero g");
    if (nu_max < 0) throw SpecInvalid("nu_max must be >= 0");
    EOPFamily fam{alpha, g, static_cast<long>(*g.degree()), {}};
    for (int nu = 0; nu <= nu_max; ++nu) {
        const std::size_t degree = static_cast<std::size_t>(fam.mu + nu);
        auto space = eop_solution_space(alpha, g, nu, degree);
        if (space.size() != 1)
            throw NullSpaceDimension("nu=" + std::to_string(nu) + ": solution space of dimension " +
                                     std::to_string(space.size()) + " (expected 1)");
        Poly y = monic(space.front());
        if (y.degree() != degree)
            throw NullSpaceDimension("nu=" + std::to_string(nu) + ": solution has degree " +
                                     std::to_string(y.degree().value_or(0)) + ", expected " + std::to_string(degree));
        fam.polys.push_back(std::move(y));
    }
    return fam;
}

inline EOPFamily solve_eop(const ExtensionSpec& spec, const GReport& report, int nu_max) {
    return solve_eop(spec.alpha(), report.g, nu_max);
}

} // namespace xlag
