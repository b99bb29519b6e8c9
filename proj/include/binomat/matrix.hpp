#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "binomat/polynomial.hpp"
#include "binomat/ring.hpp"

namespace binomat {

/// Thrown by inverse() when the matrix has no inverse; carries the rank the
/// elimination reached.
class SingularMatrix : public std::domain_error {
public:
    explicit SingularMatrix(int rank)
        : std::domain_error("matrix is singular (rank " + std::to_string(rank) + ")"),
          rank_(rank) {}
    int rank() const { return rank_; }

private:
    int rank_;
};

/// Dense n x n matrix over a ring scalar R, row-major.
/// Indices are 0-based in code; the entry formulas in the docs use the
/// 1-based (i, j) convention of the constructors in family.hpp.
template <RingScalar R>
class SquareMatrix {
public:
    SquareMatrix(int order, const R& fill)
        : n_(order), e_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), fill) {
        if (order < 1) throw std::invalid_argument("SquareMatrix: order must be >= 1");
    }

    static SquareMatrix identity(int order, const R& exemplar) {
        SquareMatrix m(order, ring_zero(exemplar));
        for (int i = 0; i < order; ++i) m.at(i, i) = ring_one(exemplar);
        return m;
    }

    /// Build from an entry formula f(i, j) with 0-based indices.
    template <class F>
    static SquareMatrix from_entries(int order, const R& exemplar, F&& f) {
        SquareMatrix m(order, ring_zero(exemplar));
        for (int i = 0; i < order; ++i)
            for (int j = 0; j < order; ++j) m.at(i, j) = f(i, j);
        return m;
    }

    int order() const { return n_; }
    const R& ring_like() const { return e_[0]; }

    R& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const R& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
        a.check(b);
        SquareMatrix c = a;
        for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] = c.e_[k] + b.e_[k];
        return c;
    }
    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
        a.check(b);
        SquareMatrix c = a;
        for (std::size_t k = 0; k < c.e_.size(); ++k) c.e_[k] = c.e_[k] - b.e_[k];
        return c;
    }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        a.check(b);
        const int n = a.n_;
        SquareMatrix c(n, ring_zero(a.e_[0]) + ring_zero(b.e_[0]));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const R& aik = a.at(i, k);
                if (is_ring_zero(aik)) continue;
                for (int j = 0; j < n; ++j) c.at(i, j) = c.at(i, j) + aik * b.at(k, j);
            }
        return c;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            if (!(a.e_[k] == b.e_[k])) return false;
        return true;
    }

    /// First entry (1-based row, col) where a and b differ, or (0, 0).
    friend std::pair<int, int> first_difference(const SquareMatrix& a, const SquareMatrix& b) {
        a.check(b);
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j < a.n_; ++j)
                if (!(a.at(i, j) == b.at(i, j))) return {i + 1, j + 1};
        return {0, 0};
    }

private:
    void check(const SquareMatrix& b) const {
        if (n_ != b.n_) throw std::invalid_argument("SquareMatrix: order mismatch");
    }

    int n_;
    std::vector<R> e_;
};

/// A^e by binary exponentiation; A^0 = I.
template <RingScalar R>
SquareMatrix<R> mat_pow(const SquareMatrix<R>& a, long long e) {
    if (e < 0) throw std::domain_error("mat_pow: negative exponent");
    SquareMatrix<R> acc = SquareMatrix<R>::identity(a.order(), a.ring_like());
    SquareMatrix<R> b = a;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        if (e >>= 1) b = b * b;
    }
    return acc;
}

template <RingScalar R>
R trace(const SquareMatrix<R>& a) {
    R t = ring_zero(a.ring_like());
    for (int i = 0; i < a.order(); ++i) t = t + a.at(i, i);
    return t;
}

template <RingScalar R, class F>
auto map_entries(const SquareMatrix<R>& a, F&& f) -> SquareMatrix<decltype(f(a.at(0, 0)))> {
    using S = decltype(f(a.at(0, 0)));
    return SquareMatrix<S>::from_entries(a.order(), f(a.at(0, 0)),
                                         [&](int i, int j) { return f(a.at(i, j)); });
}

template <RingScalar R>
SquareMatrix<R> scalar_times(const R& s, const SquareMatrix<R>& a) {
    return map_entries(a, [&](const R& x) { return s * x; });
}

/// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.
/// Throws SingularMatrix (with the rank found) when no inverse exists.
template <FieldScalar F>
SquareMatrix<F> inverse(const SquareMatrix<F>& a) {
    const int n = a.order();
    SquareMatrix<F> m = a;
    SquareMatrix<F> inv = SquareMatrix<F>::identity(n, a.ring_like());
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!is_ring_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw SingularMatrix(rank);
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const F pinv = ring_inv(m.at(col, col));
        for (int j = 0; j < n; ++j) {
            m.at(col, j) = pinv * m.at(col, j);
            inv.at(col, j) = pinv * inv.at(col, j);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || is_ring_zero(m.at(r, col))) continue;
            const F f = m.at(r, col);
            for (int j = 0; j < n; ++j) {
                m.at(r, j) = m.at(r, j) - f * m.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
        ++rank;
    }
    return inv;
}

/// Basis of the right null space { v : A v = 0 }, each vector normalized so
/// that its last nonzero coordinate is 1. Empty iff A is invertible.
template <FieldScalar F>
std::vector<std::vector<F>> kernel_basis(const SquareMatrix<F>& a) {
    const int n = a.order();
    const F zero = ring_zero(a.ring_like());
    const F one = ring_one(a.ring_like());
    SquareMatrix<F> m = a;

    // reduced row echelon form
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (!is_ring_zero(m.at(r, col))) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(row, j));
        const F pinv = ring_inv(m.at(row, col));
        for (int j = 0; j < n; ++j) m.at(row, j) = pinv * m.at(row, j);
        for (int r = 0; r < n; ++r) {
            if (r == row || is_ring_zero(m.at(r, col))) continue;
            const F f = m.at(r, col);
            for (int j = 0; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(row, j);
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<F>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<F> v(static_cast<std::size_t>(n), zero);
        v[static_cast<std::size_t>(free)] = one;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[static_cast<std::size_t>(pivot_col_of_row[r])] = -m.at(static_cast<int>(r), free);
        // normalize: last nonzero coordinate becomes 1
        int last = -1;
        for (int i = n - 1; i >= 0; --i)
            if (!is_ring_zero(v[static_cast<std::size_t>(i)])) {
                last = i;
                break;
            }
        const F scale = ring_inv(v[static_cast<std::size_t>(last)]);
        for (auto& x : v) x = scale * x;
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Monic characteristic polynomial det(xI - A) by the Berkowitz algorithm.
/// Division-free, so it is valid verbatim over any commutative ring
/// (GF(p) included), not just fields.
template <RingScalar R>
DensePolynomial<R> charpoly(const SquareMatrix<R>& a) {
    const int n = a.order();
    const R zero = ring_zero(a.ring_like());
    const R one = ring_one(a.ring_like());

    // coefficients of det(xI - M_r) for the leading principal r x r block,
    // descending powers: vect[k] multiplies x^{r-k}
    std::vector<R> vect{one, -a.at(0, 0)};
    for (int r = 1; r < n; ++r) {
        // Toeplitz column for the (r+1) x (r+1) block:
        // t_0 = 1, t_1 = -a_rr, t_{k+2} = -(row_r . M^k . col_r), M the r x r block
        std::vector<R> t{one, -a.at(r, r)};
        std::vector<R> w(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) w[static_cast<std::size_t>(i)] = a.at(i, r);
        for (int k = 0; k < r; ++k) {
            R dot = zero;
            for (int i = 0; i < r; ++i) dot = dot + a.at(r, i) * w[static_cast<std::size_t>(i)];
            t.push_back(-dot);
            if (k + 1 < r) {
                std::vector<R> w2(static_cast<std::size_t>(r), zero);
                for (int i = 0; i < r; ++i) {
                    for (int j = 0; j < r; ++j)
                        w2[static_cast<std::size_t>(i)] =
                            w2[static_cast<std::size_t>(i)] + a.at(i, j) * w[static_cast<std::size_t>(j)];
                }
                w = std::move(w2);
            }
        }
        // vect <- (lower-triangular Toeplitz from t) * vect
        std::vector<R> next(vect.size() + 1, zero);
        for (std::size_t i = 0; i < next.size(); ++i)
            for (std::size_t j = 0; j < vect.size() && j <= i; ++j)
                if (i - j < t.size()) next[i] = next[i] + t[i - j] * vect[j];
        vect = std::move(next);
    }

    std::vector<R> ascending(vect.rbegin(), vect.rend());
    return DensePolynomial<R>(std::move(ascending));
}

/// The determinant-first sign convention det(A - xI) = (-1)^n det(xI - A).
template <RingScalar R>
DensePolynomial<R> paper_sign(const DensePolynomial<R>& monic_charpoly, int order) {
    if (order % 2 == 0) return monic_charpoly;
    return -monic_charpoly;
}

/// Substitute the matrix A into p (x^k -> A^k, constants -> c I).
template <RingScalar R>
SquareMatrix<R> poly_at_matrix(const DensePolynomial<R>& p, const SquareMatrix<R>& a) {
    SquareMatrix<R> acc(a.order(), ring_zero(a.ring_like()));
    for (int i = p.degree() < 0 ? 0 : p.degree(); i >= 0; --i) {
        acc = acc * a;
        const R c = p.coeff(i);
        for (int d = 0; d < a.order(); ++d) acc.at(d, d) = acc.at(d, d) + c;
    }
    return acc;
}

/// Text rendering: one line per row, entries separated by `sep`.
template <RingScalar R>
std::string to_text(const SquareMatrix<R>& a, const std::string& sep = " ") {
    std::string out;
    for (int i = 0; i < a.order(); ++i) {
        for (int j = 0; j < a.order(); ++j) {
            if (j) out += sep;
            out += to_string(a.at(i, j));
        }
        out += "\n";
    }
    return out;
}

}  // namespace binomat
