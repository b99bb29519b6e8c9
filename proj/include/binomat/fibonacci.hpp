#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "binomat/bigint.hpp"
#include "binomat/rational.hpp"

namespace binomat {

namespace detail {

/// (F_k, F_{k+1}) for k >= 0 by fast doubling:
///   F_{2k}   = F_k (2 F_{k+1} - F_k)
///   F_{2k+1} = F_k^2 + F_{k+1}^2
inline std::pair<BigInt, BigInt> fib_pair(std::uint64_t k) {
    if (k == 0) return {BigInt(0), BigInt(1)};
    auto [a, b] = fib_pair(k >> 1);  // (F_m, F_{m+1}), m = k/2
    BigInt c = a * (2 * b - a);      // F_{2m}
    BigInt d = a * a + b * b;        // F_{2m+1}
    if (k & 1) return {d, c + d};
    return {c, d};
}

}  // namespace detail

/// Fibonacci number F_k for any signed index, O(log|k|) multiplications.
/// Convention: F_0 = 0, F_1 = F_2 = 1, extended backwards by the recurrence,
/// i.e. F_{-k} = (-1)^{k+1} F_k.
inline BigInt fib(std::int64_t k) {
    if (k >= 0) return detail::fib_pair(static_cast<std::uint64_t>(k)).first;
    BigInt f = detail::fib_pair(static_cast<std::uint64_t>(-k)).first;
    return ((-k) % 2 == 0) ? -f : f;
}

/// Binomial coefficient C(a, b). Zero outside 0 <= b <= a; C(a, 0) = 1.
inline BigInt binom(std::int64_t a, std::int64_t b) {
    if (a < 0) throw std::domain_error("binom: negative upper index");
    if (b < 0 || b > a) return BigInt(0);
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;  // exact: r is C(a-b+i, i) after this step
    }
    return r;
}

/// The signed fibonomial array b_{n,m}:
///   b_{n,0} = 1,  b_{n,m} = 0 for m > n,
///   b_{n,m} = b_{n-1,m-1} * (-1)^m * F_n / F_m  otherwise.
/// Always integer-valued; |b_{n,m}| is the fibonomial coefficient.
inline Rational fibonomial_b(std::int64_t n, std::int64_t m) {
    if (n < 0 || m < 0) throw std::domain_error("fibonomial_b: negative index");
    if (m == 0) return Rational(1);
    if (m > n) return Rational(0);
    Rational b(1);
    // walk the recurrence down the diagonal: b_{n,m} <- b_{n-1,m-1} <- ... <- b_{n-m,0}
    for (std::int64_t j = 1; j <= m; ++j) {
        std::int64_t nn = n - m + j;
        Rational step = Rational(fib(nn), fib(j));
        if (j % 2 != 0) step = -step;
        b = b * step;
    }
    return b;
}

}  // namespace binomat
