#pragma once

#include <algorithm>
#include <concepts>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "binomat/ring.hpp"

namespace binomat {

/// Dense univariate polynomial over a ring scalar R.
///
/// Coefficients are stored ascending (index i = coefficient of x^i) and
/// always hold at least one element, so a ring exemplar is available even
/// for the zero polynomial (the exemplar carries runtime moduli).
/// Normalized form has no trailing zero coefficient beyond index 0.
template <RingScalar R>
class DensePolynomial {
public:
    DensePolynomial()
        requires std::default_initializable<R>
        : coeffs_{R{}} {}

    explicit DensePolynomial(const R& constant) : coeffs_{constant} {}

    explicit DensePolynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("DensePolynomial: empty coefficients");
        normalize();
    }

    DensePolynomial(std::initializer_list<R> coeffs)
        : DensePolynomial(std::vector<R>(coeffs)) {}

    static DensePolynomial zero_like(const R& exemplar) {
        return DensePolynomial(ring_zero(exemplar));
    }
    static DensePolynomial one_like(const R& exemplar) {
        return DensePolynomial(ring_one(exemplar));
    }
    /// c * x^deg
    static DensePolynomial monomial(const R& c, int deg) {
        std::vector<R> v(static_cast<std::size_t>(deg) + 1, ring_zero(c));
        v.back() = c;
        return DensePolynomial(std::move(v));
    }

    /// Highest nonzero index; -1 for the zero polynomial.
    int degree() const {
        return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1;
    }

    bool is_zero() const { return coeffs_.size() == 1 && is_ring_zero(coeffs_[0]); }

    /// Coefficient of x^i (zero beyond the degree).
    R coeff(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return ring_zero(coeffs_[0]);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    R leading() const { return coeffs_.back(); }

    /// Exemplar scalar of the coefficient ring.
    const R& ring_like() const { return coeffs_[0]; }

    const std::vector<R>& coefficients() const { return coeffs_; }

    DensePolynomial operator-() const {
        std::vector<R> v;
        v.reserve(coeffs_.size());
        for (const R& c : coeffs_) v.push_back(-c);
        return DensePolynomial(std::move(v));
    }

    friend DensePolynomial operator+(const DensePolynomial& p, const DensePolynomial& q) {
        std::vector<R> v;
        const std::size_t n = std::max(p.coeffs_.size(), q.coeffs_.size());
        v.reserve(n);
        for (std::size_t i = 0; i < n; ++i) v.push_back(p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i)));
        return DensePolynomial(std::move(v));
    }
    friend DensePolynomial operator-(const DensePolynomial& p, const DensePolynomial& q) {
        return p + (-q);
    }
    friend DensePolynomial operator*(const DensePolynomial& p, const DensePolynomial& q) {
        const R zero = ring_zero(p.coeffs_[0]) + ring_zero(q.coeffs_[0]);  // also checks ring match
        if (p.is_zero() || q.is_zero()) return DensePolynomial(zero);
        std::vector<R> v(p.coeffs_.size() + q.coeffs_.size() - 1, zero);
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
                v[i + j] = v[i + j] + p.coeffs_[i] * q.coeffs_[j];
        return DensePolynomial(std::move(v));
    }

    friend bool operator==(const DensePolynomial& p, const DensePolynomial& q) {
        if (p.coeffs_.size() != q.coeffs_.size()) return false;
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            if (!(p.coeffs_[i] == q.coeffs_[i])) return false;
        return true;
    }

private:
    void normalize() {
        while (coeffs_.size() > 1 && is_ring_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
};

/// p^k by binary exponentiation; p^0 = 1.
template <RingScalar R>
DensePolynomial<R> poly_pow(const DensePolynomial<R>& p, long long k) {
    if (k < 0) throw std::domain_error("poly_pow: negative exponent");
    DensePolynomial<R> acc = DensePolynomial<R>::one_like(p.ring_like());
    DensePolynomial<R> b = p;
    while (k > 0) {
        if (k & 1) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

/// Horner evaluation of p at x0, where x0 lives in ring S and the
/// coefficients embed into S via `embed`.
template <RingScalar R, RingScalar S, class Embed>
S poly_eval(const DensePolynomial<R>& p, const S& x0, Embed&& embed) {
    S acc = ring_zero(x0);
    for (int i = p.degree() < 0 ? 0 : p.degree(); i >= 0; --i) acc = acc * x0 + embed(p.coeff(i));
    return acc;
}

/// Horner evaluation at a point of the coefficient ring itself.
template <RingScalar R>
R poly_eval(const DensePolynomial<R>& p, const R& x0) {
    return poly_eval(p, x0, [](const R& c) { return c; });
}

/// Text form "c0 + c1*x + c2*x^2 + ...", ascending, zero terms skipped,
/// unit coefficients shortened, composite coefficients parenthesized.
template <RingScalar R>
std::string to_string(const DensePolynomial<R>& p) {
    if (p.is_zero()) return to_string(p.coeff(0));
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        const R c = p.coeff(i);
        if (is_ring_zero(c)) continue;
        std::string cs = to_string(c);
        const bool negated = !out.empty() && cs.size() > 1 && cs.front() == '-' &&
                             cs.find_first_of("+-", 1) == std::string::npos;
        if (negated) {
            out += " - ";
            cs = cs.substr(1);
        } else if (!out.empty()) {
            out += " + ";
        }
        if (i == 0) {
            out += cs;
            continue;
        }
        if (cs.find_first_of("+-", 1) != std::string::npos || cs.front() == '-')
            cs = "(" + cs + ")";
        if (cs != "1") out += cs + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

template <RingScalar R>
std::ostream& operator<<(std::ostream& os, const DensePolynomial<R>& p) {
    return os << to_string(p);
}

}  // namespace binomat
