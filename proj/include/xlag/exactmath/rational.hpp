#pragma once

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "xlag/error.hpp"

namespace xlag {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : v_(static_cast<long>(value)) {}  // NOLINT
    explicit Rational(const BigInt& value) : v_(value) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw SpecInvalid("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p", "p/q", or a terminating decimal such as "-2.25".
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto trim = [](std::string& t) {
            const auto b = t.find_first_not_of(" \t");
            const auto e = t.find_last_not_of(" \t");
            t = b == std::string::npos ? std::string{} : t.substr(b, e - b + 1);
        };
        trim(s);
        if (s.empty()) throw SpecInvalid("empty rational literal");
        try {
            if (const auto dot = s.find('.'); dot != std::string::npos) {
                if (s.find('/') != std::string::npos)
                    throw SpecInvalid("mixed decimal/fraction literal: " + s);
                const std::string frac = s.substr(dot + 1);
                std::string digits = s.substr(0, dot) + frac;
                if (digits.empty() || digits == "-" || digits == "+")
                    throw SpecInvalid("bad rational literal: " + s);
                if (digits.front() == '+') digits.erase(0, 1);
                BigInt den;
                mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
                return Rational(checked_int(digits, s), den);
            }
            if (const auto slash = s.find('/'); slash != std::string::npos) {
                return Rational(checked_int(s.substr(0, slash), s),
                                checked_int(s.substr(slash + 1), s));
            }
            return Rational(checked_int(s, s));
        } catch (const std::invalid_argument&) {
            throw SpecInvalid("bad rational literal: " + s);
        }
    }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    double to_double() const { return v_.get_d(); }

    long double to_long_double() const {
        // Two-term split so the result keeps more than double precision.
        mpf_class q(v_, 192);
        const double hi = q.get_d();
        mpf_class rest(q - hi, 192);
        return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
    }

    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return from_raw(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw SpecInvalid("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    static Rational from_raw(mpq_class v) {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    static BigInt checked_int(std::string t, const std::string& whole) {
        if (!t.empty() && t.front() == '+') t.erase(0, 1);
        if (t.empty() || t == "-") throw SpecInvalid("bad rational literal: " + whole);
        for (std::size_t i = (t.front() == '-') ? 1 : 0; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') throw SpecInvalid("bad rational literal: " + whole);
        return BigInt(t, 10);
    }

    mpq_class v_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline int sign_of_power_of_minus_one(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

} // namespace xlag
