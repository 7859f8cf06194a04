#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xlag/error.hpp"
#include "xlag/exactmath/rational.hpp"

namespace xlag {

/// Dense univariate polynomial in z over the rationals. Coefficient i
/// multiplies z^i. The zero polynomial has no coefficients and no degree.
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

    static Poly monomial(const Rational& c, std::size_t power) {
        std::vector<Rational> v(power + 1);
        v[power] = c;
        return Poly(std::move(v));
    }

    static Poly z() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }

    /// nullopt is the degree of the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational{}; }

    std::span<const Rational> coefficients() const { return c_; }

    Rational leading() const { return c_.empty() ? Rational{} : c_.back(); }
    Rational constant_term() const { return coeff(0); }

    /// Index of the lowest nonzero coefficient (the z-adic valuation).
    std::optional<std::size_t> valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return i;
        return std::nullopt;
    }

    Rational operator()(const Rational& z0) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= z0;
            acc += *it;
        }
        return acc;
    }

    template <typename Real>
    Real eval_real(Real z0) const {
        Real acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z0 + static_cast<Real>(it->to_long_double());
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return Poly(std::move(d));
    }

    /// p(-z).
    Poly negated_argument() const {
        auto v = c_;
        for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
        return Poly(std::move(v));
    }

    /// p(z) * z^e.
    Poly shifted_up(std::size_t e) const {
        if (is_zero()) return {};
        std::vector<Rational> v(e);
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    Poly operator-() const {
        auto v = c_;
        for (auto& x : v) x = -x;
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Poly& operator*=(const Rational& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= s;
        return *this;
    }

    Poly& operator/=(const Rational& s) {
        if (s.is_zero()) throw SpecInvalid("polynomial divided by zero scalar");
        for (auto& x : c_) x /= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator/(Poly a, const Rational& s) { return a /= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string to_string(const char* var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Rational& a = c_[k];
            if (a.is_zero()) continue;
            const bool neg = a.sign() < 0;
            const Rational mag = neg ? -a : a;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            const bool unit = mag == Rational(1);
            if (k == 0 || !unit) out += mag.to_string();
            if (k > 0) {
                if (!unit) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Poly diff(const Poly& p) { return p.derivative(); }

inline Rational eval(const Poly& p, const Rational& z0) { return p(z0); }

/// p / z^e, requiring the e lowest coefficients to vanish.
inline Poly divexact_zpow(const Poly& p, std::size_t e) {
    const auto coeffs = p.coefficients();
    for (std::size_t i = 0; i < e && i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero())
            throw NotDivisible("coefficient of z^" + std::to_string(i) + " is " + coeffs[i].to_string() +
                               ", cannot divide by z^" + std::to_string(e));
    }
    if (coeffs.size() <= e) return {};
    return Poly(std::vector<Rational>(coeffs.begin() + static_cast<std::ptrdiff_t>(e), coeffs.end()));
}

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division over Q.
inline PolyDivision divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (a.is_zero() || *a.degree() < *b.degree()) return {Poly{}, a};
    const std::size_t db = *b.degree();
    const Rational lb = b.leading();
    std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<Rational> quo(rem.size() - db);
    const auto bc = b.coefficients();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        const Rational f = rem[k] / lb;
        quo[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * bc[j];
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

/// a / b when b is known to divide a.
inline Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw NotDivisible("polynomial division left remainder " + r.to_string());
    return q;
}

inline Poly monic(const Poly& p) { return p.is_zero() ? p : p / p.leading(); }

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

} // namespace xlag
