#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "binomat/polynomial.hpp"
#include "binomat/ring.hpp"

namespace binomat {

/// Truncated formal power series over a field: the first N coefficients of
/// x^0 ... x^{N-1}, with every operation performed mod x^N.
/// Mixing two lengths truncates to the shorter one.
template <FieldScalar F>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty");
    }

    TruncatedSeries(const DensePolynomial<F>& p, int order) {
        if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be >= 1");
        coeffs_.reserve(static_cast<std::size_t>(order));
        for (int i = 0; i < order; ++i) coeffs_.push_back(p.coeff(i));
    }

    int order() const { return static_cast<int>(coeffs_.size()); }
    const F& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<F>& coefficients() const { return coeffs_; }
    const F& ring_like() const { return coeffs_[0]; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int n = std::min(a.order(), b.order());
        std::vector<F> v;
        v.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v.push_back(a.coeff(i) + b.coeff(i));
        return TruncatedSeries(std::move(v));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int n = std::min(a.order(), b.order());
        std::vector<F> v;
        v.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v.push_back(a.coeff(i) - b.coeff(i));
        return TruncatedSeries(std::move(v));
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const int n = std::min(a.order(), b.order());
        std::vector<F> v(static_cast<std::size_t>(n), ring_zero(a.ring_like()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; i + j < n && j < b.order(); ++j)
                v[static_cast<std::size_t>(i + j)] =
                    v[static_cast<std::size_t>(i + j)] + a.coeff(i) * b.coeff(j);
        return TruncatedSeries(std::move(v));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order()) return false;
        for (int i = 0; i < a.order(); ++i)
            if (!(a.coeff(i) == b.coeff(i))) return false;
        return true;
    }

private:
    std::vector<F> coeffs_;
};

/// First N coefficients of the formal power series num/den.
/// Requires den to have an invertible constant term; multiplying the result
/// back by den reproduces num mod x^N.
template <FieldScalar F>
TruncatedSeries<F> series_div(const DensePolynomial<F>& num, const DensePolynomial<F>& den,
                              int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("series_div: need at least one term");
    const F d0 = den.coeff(0);
    if (is_ring_zero(d0))
        throw std::domain_error("series_div: denominator has zero constant term");
    const F d0inv = ring_inv(d0);
    std::vector<F> c;
    c.reserve(static_cast<std::size_t>(n_terms));
    for (int k = 0; k < n_terms; ++k) {
        F acc = num.coeff(k);
        for (int i = 1; i <= std::min(k, den.degree()); ++i)
            acc = acc - den.coeff(i) * c[static_cast<std::size_t>(k - i)];
        c.push_back(acc * d0inv);
    }
    return TruncatedSeries<F>(std::move(c));
}

template <FieldScalar F>
std::string to_string(const TruncatedSeries<F>& s) {
    std::string out = "(";
    for (int i = 0; i < s.order(); ++i) {
        if (i) out += ", ";
        out += to_string(s.coeff(i));
    }
    return out + ")";
}

}  // namespace binomat
