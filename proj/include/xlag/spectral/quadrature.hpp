#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "xlag/error.hpp"

namespace xlag {

/// n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<long double> nodes;
    std::vector<long double> weights;
};

namespace detail {

/// P_n(x) and P_n'(x) by the three-term recurrence.
inline std::pair<long double, long double> legendre_with_derivative(std::size_t n, long double x) {
    long double p0 = 1, p1 = x;
    if (n == 0) return {1, 0};
    for (std::size_t k = 2; k <= n; ++k) {
        const long double pk = ((2.0L * k - 1) * x * p1 - (k - 1.0L) * p0) / k;
        p0 = p1;
        p1 = pk;
    }
    return {p1, static_cast<long double>(n) * (x * p1 - p0) / (x * x - 1)};
}

} // namespace detail

/// Nodes by Newton iteration from the Tricomi initial guesses.
inline GaussRule gauss_legendre(std::size_t n) {
    if (n == 0) throw SpecInvalid("Gauss rule needs at least one node");
    GaussRule rule{std::vector<long double>(n), std::vector<long double>(n)};
    const long double pi = std::numbers::pi_v<long double>;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        long double x = std::cos(pi * (static_cast<long double>(i) + 0.75L) / (static_cast<long double>(n) + 0.5L));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = detail::legendre_with_derivative(n, x);
            const long double dx = p / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-19L) break;
        }
        const long double dp = detail::legendre_with_derivative(n, x).second;
        const long double w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0;
    return rule;
}

template <typename F>
long double gauss_panel(const F& f, long double a, long double b, const GaussRule& rule) {
    const long double half = (b - a) / 2;
    const long double mid = (a + b) / 2;
    long double sum = 0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return sum * half;
}

struct QuadratureResult {
    long double value = 0;
    long double error_estimate = 0;
    std::size_t panels = 0;
    std::size_t evaluations = 0;
};

/// Composite Gauss-Legendre with adaptive bisection. A panel is accepted
/// once its value agrees with the sum over its two halves to within a share
/// of abs_tol proportional to its width.
template <typename F>
QuadratureResult integrate_adaptive(const F& f, long double a, long double b, long double abs_tol,
                                    const GaussRule& rule, int initial_panels = 16, int max_depth = 40) {
    struct Panel {
        long double lo, hi, value;
        int depth;
    };
    QuadratureResult out;
    const std::size_t npts = rule.nodes.size();
    std::vector<Panel> stack;
    const long double width = (b - a) / initial_panels;
    for (int p = initial_panels - 1; p >= 0; --p) {
        const long double lo = a + width * p;
        const long double hi = p == initial_panels - 1 ? b : lo + width;
        stack.push_back({lo, hi, gauss_panel(f, lo, hi, rule), 0});
        out.evaluations += npts;
    }
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const long double mid = (p.lo + p.hi) / 2;
        const long double left = gauss_panel(f, p.lo, mid, rule);
        const long double right = gauss_panel(f, mid, p.hi, rule);
        out.evaluations += 2 * npts;
        const long double diff = std::fabs(left + right - p.value);
        const long double share = abs_tol * (p.hi - p.lo) / (b - a);
        if (diff <= share || p.depth >= max_depth) {
            out.value += left + right;
            out.error_estimate += diff;
            ++out.panels;
        } else {
            stack.push_back({mid, p.hi, right, p.depth + 1});
            stack.push_back({p.lo, mid, left, p.depth + 1});
        }
    }
    return out;
}

} // namespace xlag
