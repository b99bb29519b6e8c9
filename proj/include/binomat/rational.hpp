#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "binomat/bigint.hpp"

namespace binomat {

/// Exact rational number over BigInt.
///
/// Invariants, maintained by every operation:
///   - denominator > 0
///   - gcd(|numerator|, denominator) = 1
/// Equality is therefore structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}                    // NOLINT(google-explicit-constructor)
    Rational(std::int64_t v) : num_(v), den_(1) {}           // NOLINT(google-explicit-constructor)
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}      // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    /// -1, 0 or +1.
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const { return raw(-num_, den_); }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }

    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        const BigInt l = x.num_ * y.den_, r = y.num_ * x.den_;
        return l < r ? std::strong_ordering::less
                     : (l == r ? std::strong_ordering::equal : std::strong_ordering::greater);
    }

    friend Rational abs(const Rational& x) { return x.num_ < 0 ? -x : x; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
        os << x.num_;
        if (x.den_ != 1) os << "/" << x.den_;
        return os;
    }

private:
    static Rational raw(BigInt n, BigInt d) {
        Rational r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

// Ring protocol (see ring.hpp).
inline Rational ring_zero(const Rational&) { return Rational(0); }
inline Rational ring_one(const Rational&) { return Rational(1); }
inline Rational ring_from_int(const Rational&, const BigInt& v) { return Rational(v); }
inline Rational ring_inv(const Rational& x) {
    if (x.is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(1) / x;
}
inline std::string ring_name(const Rational&) { return "Q"; }

/// Text form "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& x) {
    std::string s = x.num().str();
    if (!x.is_integer()) s += "/" + x.den().str();
    return s;
}

}  // namespace binomat
