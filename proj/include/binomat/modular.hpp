#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "binomat/bigint.hpp"

namespace binomat {

/// Element of GF(p) for a prime modulus p carried in the value.
/// Values are canonical residues in [0, p); products go through a 128-bit
/// intermediate, so any p certified by is_prime (p < 10^12) is safe.
class ModScalar {
public:
    ModScalar(std::int64_t value, std::int64_t p) : p_(p) {
        if (p < 2) throw std::domain_error("ModScalar: modulus must be >= 2");
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    static ModScalar from_bigint(const BigInt& value, std::int64_t p) {
        BigInt r = value % p;
        return ModScalar(static_cast<std::int64_t>(r), p);
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    ModScalar operator-() const { return ModScalar(p_ - v_, p_); }

    friend ModScalar operator+(const ModScalar& x, const ModScalar& y) {
        x.check(y);
        return ModScalar(x.v_ + y.v_, x.p_);
    }
    friend ModScalar operator-(const ModScalar& x, const ModScalar& y) {
        x.check(y);
        return ModScalar(x.v_ - y.v_ + x.p_, x.p_);
    }
    friend ModScalar operator*(const ModScalar& x, const ModScalar& y) {
        x.check(y);
        auto w = static_cast<__int128>(x.v_) * y.v_;
        return ModScalar(static_cast<std::int64_t>(w % x.p_), x.p_);
    }
    friend ModScalar operator/(const ModScalar& x, const ModScalar& y) { return x * inverse(y); }

    ModScalar& operator+=(const ModScalar& y) { return *this = *this + y; }
    ModScalar& operator-=(const ModScalar& y) { return *this = *this - y; }
    ModScalar& operator*=(const ModScalar& y) { return *this = *this * y; }

    friend bool operator==(const ModScalar& x, const ModScalar& y) {
        x.check(y);
        return x.v_ == y.v_;
    }

    friend ModScalar inverse(const ModScalar& x) {
        // extended Euclid; exists iff gcd(v, p) = 1
        if (x.v_ == 0) throw std::domain_error("ModScalar: inverse of zero");
        std::int64_t r0 = x.p_, r1 = x.v_, s0 = 0, s1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            r0 -= q * r1;
            std::swap(r0, r1);
            s0 -= q * s1;
            std::swap(s0, s1);
        }
        if (r0 != 1) throw std::domain_error("ModScalar: value not invertible (composite modulus?)");
        return ModScalar(s0, x.p_);
    }

    friend std::ostream& operator<<(std::ostream& os, const ModScalar& x) { return os << x.v_; }

private:
    void check(const ModScalar& y) const {
        if (p_ != y.p_) throw std::invalid_argument("ModScalar: mixed moduli");
    }

    std::int64_t v_;
    std::int64_t p_;
};

// Ring protocol.
inline ModScalar ring_zero(const ModScalar& like) { return ModScalar(0, like.modulus()); }
inline ModScalar ring_one(const ModScalar& like) { return ModScalar(1, like.modulus()); }
inline ModScalar ring_from_int(const ModScalar& like, const BigInt& v) {
    return ModScalar::from_bigint(v, like.modulus());
}
inline ModScalar ring_inv(const ModScalar& x) { return inverse(x); }
inline std::string ring_name(const ModScalar& x) { return "GF(" + std::to_string(x.modulus()) + ")"; }
inline std::string to_string(const ModScalar& x) { return std::to_string(x.value()); }

/// Element c0 + c1*t of GF(p^2) = GF(p)[t]/(m(t)) for a monic irreducible
/// quadratic m(t) = t^2 + m1*t + m0. The modulus pair rides along in the
/// value; elements of different field presentations do not mix.
class ModQuadScalar {
public:
    ModQuadScalar(ModScalar c0, ModScalar c1, std::int64_t m0, std::int64_t m1)
        : c0_(c0), c1_(c1), m0_(m0), m1_(m1) {
        if (c0.modulus() != c1.modulus())
            throw std::invalid_argument("ModQuadScalar: mixed base moduli");
    }

    static ModQuadScalar embed(const ModScalar& x, std::int64_t m0, std::int64_t m1) {
        return {x, ModScalar(0, x.modulus()), m0, m1};
    }

    const ModScalar& c0() const { return c0_; }
    const ModScalar& c1() const { return c1_; }
    std::int64_t p() const { return c0_.modulus(); }
    std::int64_t mod_c0() const { return m0_; }
    std::int64_t mod_c1() const { return m1_; }
    bool is_zero() const { return c0_.is_zero() && c1_.is_zero(); }
    bool in_base_field() const { return c1_.is_zero(); }

    ModQuadScalar operator-() const { return {-c0_, -c1_, m0_, m1_}; }

    friend ModQuadScalar operator+(const ModQuadScalar& x, const ModQuadScalar& y) {
        x.check(y);
        return {x.c0_ + y.c0_, x.c1_ + y.c1_, x.m0_, x.m1_};
    }
    friend ModQuadScalar operator-(const ModQuadScalar& x, const ModQuadScalar& y) {
        x.check(y);
        return {x.c0_ - y.c0_, x.c1_ - y.c1_, x.m0_, x.m1_};
    }
    friend ModQuadScalar operator*(const ModQuadScalar& x, const ModQuadScalar& y) {
        // (a + bt)(c + dt) = ac + (ad + bc) t + bd t^2,  t^2 = -m1 t - m0
        x.check(y);
        ModScalar m0(x.m0_, x.p()), m1(x.m1_, x.p());
        ModScalar ac = x.c0_ * y.c0_, bd = x.c1_ * y.c1_;
        ModScalar mid = x.c0_ * y.c1_ + x.c1_ * y.c0_;
        return {ac - bd * m0, mid - bd * m1, x.m0_, x.m1_};
    }
    friend ModQuadScalar operator/(const ModQuadScalar& x, const ModQuadScalar& y) {
        return x * inverse(y);
    }

    friend bool operator==(const ModQuadScalar& x, const ModQuadScalar& y) {
        x.check(y);
        return x.c0_ == y.c0_ && x.c1_ == y.c1_;
    }

    /// Conjugate over GF(p): t -> -m1 - t (the other root of m).
    friend ModQuadScalar conj(const ModQuadScalar& x) {
        ModScalar m1(x.m1_, x.p());
        return {x.c0_ - x.c1_ * m1, -x.c1_, x.m0_, x.m1_};
    }

    friend ModQuadScalar inverse(const ModQuadScalar& x) {
        if (x.is_zero()) throw std::domain_error("ModQuadScalar: inverse of zero");
        // norm = x * conj(x) lies in GF(p); nonzero because m is irreducible
        ModQuadScalar c = conj(x);
        ModQuadScalar n = x * c;
        ModScalar ninv = inverse(n.c0_);
        return {c.c0_ * ninv, c.c1_ * ninv, x.m0_, x.m1_};
    }

    friend std::ostream& operator<<(std::ostream& os, const ModQuadScalar& x);

private:
    void check(const ModQuadScalar& y) const {
        if (p() != y.p() || m0_ != y.m0_ || m1_ != y.m1_)
            throw std::invalid_argument("ModQuadScalar: mixed field presentations");
    }

    ModScalar c0_;
    ModScalar c1_;
    std::int64_t m0_;  // constant coefficient of the modulus quadratic
    std::int64_t m1_;  // linear coefficient of the modulus quadratic
};

// Ring protocol.
inline ModQuadScalar ring_zero(const ModQuadScalar& like) {
    return ModQuadScalar::embed(ModScalar(0, like.p()), like.mod_c0(), like.mod_c1());
}
inline ModQuadScalar ring_one(const ModQuadScalar& like) {
    return ModQuadScalar::embed(ModScalar(1, like.p()), like.mod_c0(), like.mod_c1());
}
inline ModQuadScalar ring_from_int(const ModQuadScalar& like, const BigInt& v) {
    return ModQuadScalar::embed(ModScalar::from_bigint(v, like.p()), like.mod_c0(), like.mod_c1());
}
inline ModQuadScalar ring_inv(const ModQuadScalar& x) { return inverse(x); }
inline std::string ring_name(const ModQuadScalar& x) {
    return "GF(" + std::to_string(x.p()) + "^2)";
}

/// Text form "c0+c1*t", same shortening rules as GoldenNumber ("t", "2*t", "1+t", ...).
inline std::string to_string(const ModQuadScalar& x) {
    if (x.c1().is_zero()) return std::to_string(x.c0().value());
    std::string s;
    if (!x.c0().is_zero()) s = std::to_string(x.c0().value());
    if (!s.empty()) s += "+";
    if (x.c1().value() != 1) s += std::to_string(x.c1().value()) + "*";
    s += "t";
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const ModQuadScalar& x) {
    return os << to_string(x);
}

/// Whether t^2 + b t + c has a root in GF(p) (brute-force scan; desk scale).
inline bool quadratic_has_root(std::int64_t p, std::int64_t b, std::int64_t c) {
    for (std::int64_t r = 0; r < p; ++r) {
        auto v = (static_cast<__int128>(r) * r + static_cast<__int128>(b) * r + c) % p;
        if (v == 0) return true;
    }
    return false;
}

/// Lexicographically smallest monic irreducible quadratic t^2 + b t + c over GF(p),
/// used as the canonical presentation of GF(p^2) when the caller's polynomial
/// splits over the base field.
inline std::pair<std::int64_t, std::int64_t> canonical_quad_modulus(std::int64_t p) {
    for (std::int64_t b = 0; b < p; ++b)
        for (std::int64_t c = 0; c < p; ++c)
            if (!quadratic_has_root(p, b, c)) return {c, b};  // (m0, m1)
    throw std::logic_error("canonical_quad_modulus: none found");  // unreachable for prime p
}

/// Both roots of the monic quadratic x^2 + b x + c inside GF(p^2).
///
/// If the quadratic is irreducible it is used as the field modulus itself, so
/// the roots are literally t and -b-t. If it splits over GF(p), the two base
/// roots are returned embedded into the canonical GF(p^2).
/// The pair (r1, r2) always satisfies r1 + r2 = -b and r1 * r2 = c.
inline std::pair<ModQuadScalar, ModQuadScalar> quad_ext_roots(std::int64_t p, std::int64_t b,
                                                              std::int64_t c) {
    if (!is_prime(p)) throw std::domain_error("quad_ext_roots: modulus is not prime");
    b %= p;
    if (b < 0) b += p;
    c %= p;
    if (c < 0) c += p;
    for (std::int64_t r = 0; r < p; ++r) {
        auto v = (static_cast<__int128>(r) * r + static_cast<__int128>(b) * r + c) % p;
        if (v == 0) {
            auto [m0, m1] = canonical_quad_modulus(p);
            std::int64_t r2 = ((-b - r) % p + p) % p;
            return {ModQuadScalar::embed(ModScalar(r, p), m0, m1),
                    ModQuadScalar::embed(ModScalar(r2, p), m0, m1)};
        }
    }
    ModScalar zero(0, p), one(1, p);
    ModQuadScalar t(zero, one, c, b);                           // root 1: t itself
    ModQuadScalar other(ModScalar(-b, p), -one, c, b);          // root 2: -b - t
    return {t, other};
}

/// Same, but from a polynomial-like object (degree() and coeff(i) over GF(p)).
template <class Poly>
std::pair<ModQuadScalar, ModQuadScalar> quad_ext_roots(std::int64_t p, const Poly& m) {
    if (m.degree() != 2 || m.coeff(2).value() != 1)
        throw std::domain_error("quad_ext_roots: polynomial must be a monic quadratic");
    return quad_ext_roots(p, m.coeff(1).value(), m.coeff(0).value());
}

}  // namespace binomat
