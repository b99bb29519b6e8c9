#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "binomat/rational.hpp"

namespace binomat {

/// Element a + b*phi of the quadratic field Q(phi), phi = (1+sqrt 5)/2.
///
/// Arithmetic uses phi^2 = phi + 1, so
///   (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi.
/// Conjugation sends phi to phibar = 1 - phi; the norm x * conj(x) is
/// rational and vanishes only at x = 0, which gives exact division.
class GoldenNumber {
public:
    GoldenNumber() : a_(0), b_(0) {}
    GoldenNumber(Rational rational_part) : a_(std::move(rational_part)), b_(0) {}  // NOLINT
    GoldenNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
    GoldenNumber(int v) : a_(v), b_(0) {}  // NOLINT(google-explicit-constructor)

    static GoldenNumber phi() { return {Rational(0), Rational(1)}; }
    static GoldenNumber phibar() { return {Rational(1), Rational(-1)}; }

    /// Rational part a and phi-coefficient b of a + b*phi.
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    GoldenNumber operator-() const { return {-a_, -b_}; }

    friend GoldenNumber operator+(const GoldenNumber& x, const GoldenNumber& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend GoldenNumber operator-(const GoldenNumber& x, const GoldenNumber& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y) {
        return {x.a_ * y.a_ + x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_};
    }
    friend GoldenNumber operator/(const GoldenNumber& x, const GoldenNumber& y) {
        return x * inverse(y);
    }

    GoldenNumber& operator+=(const GoldenNumber& y) { return *this = *this + y; }
    GoldenNumber& operator-=(const GoldenNumber& y) { return *this = *this - y; }
    GoldenNumber& operator*=(const GoldenNumber& y) { return *this = *this * y; }

    friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// Galois conjugate: a + b*phi  ->  (a + b) - b*phi.
    friend GoldenNumber conj(const GoldenNumber& x) { return {x.a_ + x.b_, -x.b_}; }

    /// Field norm x * conj(x) = a^2 + ab - b^2, a rational.
    friend Rational norm(const GoldenNumber& x) {
        return x.a_ * x.a_ + x.a_ * x.b_ - x.b_ * x.b_;
    }

    friend GoldenNumber inverse(const GoldenNumber& x) {
        if (x.is_zero()) throw std::domain_error("GoldenNumber: inverse of zero");
        Rational n = norm(x);
        GoldenNumber c = conj(x);
        return {c.a_ / n, c.b_ / n};
    }

    friend std::ostream& operator<<(std::ostream& os, const GoldenNumber& x);

private:
    Rational a_;
    Rational b_;
};

/// Exact sign of the real number a + b*phi, no floating point involved.
/// Rewrite as (2a+b)/2 + (b/2) sqrt 5 and compare u = 2a+b against
/// v sqrt 5 with v = b; when u and v disagree in sign the squares decide
/// (u^2 = 5 v^2 is impossible for rational u, v not both zero).
inline int golden_sign(const GoldenNumber& x) {
    const Rational u = Rational(2) * x.a() + x.b();
    const Rational& v = x.b();
    const int su = u.sign(), sv = v.sign();
    if (su == 0 && sv == 0) return 0;
    if (su >= 0 && sv >= 0) return 1;
    if (su <= 0 && sv <= 0) return -1;
    const Rational u2 = u * u, v2_5 = Rational(5) * v * v;
    if (su > 0) return u2 > v2_5 ? 1 : -1;  // sv < 0
    return u2 < v2_5 ? 1 : -1;              // su < 0, sv > 0
}

/// |x| < |y| as real numbers, via golden_sign(y^2 - x^2).
inline bool golden_abs_less(const GoldenNumber& x, const GoldenNumber& y) {
    return golden_sign(y * y - x * x) > 0;
}

// Ring protocol.
inline GoldenNumber ring_zero(const GoldenNumber&) { return GoldenNumber(); }
inline GoldenNumber ring_one(const GoldenNumber&) { return GoldenNumber(1); }
inline GoldenNumber ring_from_int(const GoldenNumber&, const BigInt& v) {
    return GoldenNumber(Rational(v));
}
inline GoldenNumber ring_inv(const GoldenNumber& x) { return inverse(x); }
inline std::string ring_name(const GoldenNumber&) { return "Q(phi)"; }

/// Text form "a+b*phi" with rational components, e.g. "1+2*phi", "3-2*phi",
/// "-phi", "1/3", "0".
inline std::string to_string(const GoldenNumber& x) {
    if (x.b().is_zero()) return to_string(x.a());
    std::string s;
    if (!x.a().is_zero()) s = to_string(x.a());
    const Rational babs = abs(x.b());
    if (x.b().sign() < 0)
        s += "-";
    else if (!s.empty())
        s += "+";
    if (!(babs == Rational(1))) s += to_string(babs) + "*";
    s += "phi";
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const GoldenNumber& x) {
    return os << to_string(x);
}

}  // namespace binomat
