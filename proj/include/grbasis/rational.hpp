#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "grbasis/errors.hpp"

namespace grbasis {

// b^e for e >= 0 with overflow detection.
inline std::int64_t checked_pow_i64(std::int64_t base, std::int64_t exp) {
    if (base < 0 || exp < 0) throw BadArgument("checked_pow_i64: negative input");
    __int128 acc = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > INT64_MAX) throw TooLarge("integer power exceeds 2^63-1");
    }
    return static_cast<std::int64_t>(acc);
}

// Exact rational number. Always reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) { normalize(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "7" or "3/4".
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw BadArgument("rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }

    // base^exp with exp of either sign (base > 0).
    static Rational pow(std::int64_t base, std::int64_t exp) {
        if (base <= 0) throw BadArgument("Rational::pow: base must be positive");
        if (exp >= 0) return Rational(checked_pow_i64(base, exp));
        return Rational(1, checked_pow_i64(base, -exp));
    }

private:
    using i128 = __int128;

    static Rational from128(i128 n, i128 d) {
        Rational q;
        if (d == 0) throw BadArgument("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw TooLarge("rational value exceeds 64-bit range");
        q.num_ = static_cast<std::int64_t>(n);
        q.den_ = static_cast<std::int64_t>(d);
        return q;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
    void normalize(std::int64_t n, std::int64_t d) { *this = from128(n, d); }

    std::int64_t num_;
    std::int64_t den_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace grbasis
