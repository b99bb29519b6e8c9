#pragma once

#include <concepts>
#include <string>

#include "binomat/bigint.hpp"

namespace binomat {

/// Scalar protocol shared by every coefficient ring in the library
/// (Rational, GoldenNumber, ModScalar, ModQuadScalar).
///
/// Moduli live in the values, not the types, so "give me the zero of this
/// ring" always needs an exemplar element:
///   ring_zero(x), ring_one(x)      - additive/multiplicative identity of x's ring
///   ring_from_int(x, v)            - image of the integer v in x's ring
///   ring_inv(x)                    - multiplicative inverse (all four rings are fields)
///   ring_name(x)                   - tag such as "Q", "Q(phi)", "GF(3)", "GF(3^2)"
///   to_string(x)                   - exact text rendering
///
/// All scalars are immutable values: operations return fresh objects and
/// never mutate shared state, so they are freely copyable across threads.
template <typename T>
concept RingScalar = requires(const T& x, const BigInt& v) {
    { ring_zero(x) } -> std::same_as<T>;
    { ring_one(x) } -> std::same_as<T>;
    { ring_from_int(x, v) } -> std::same_as<T>;
    { ring_name(x) } -> std::same_as<std::string>;
    { x + x } -> std::same_as<T>;
    { x - x } -> std::same_as<T>;
    { x* x } -> std::same_as<T>;
    { -x } -> std::same_as<T>;
    { x == x } -> std::same_as<bool>;
};

/// Ring with division by nonzero elements.
template <typename T>
concept FieldScalar = RingScalar<T> && requires(const T& x) {
    { ring_inv(x) } -> std::same_as<T>;
};

template <RingScalar T>
bool is_ring_zero(const T& x) {
    return x == ring_zero(x);
}

template <RingScalar T>
bool is_ring_one(const T& x) {
    return x == ring_one(x);
}

/// x^e by binary exponentiation, x^0 = 1.
template <RingScalar T>
T ring_pow(const T& x, long long e) {
    if (e < 0) throw std::domain_error("ring_pow: negative exponent");
    T acc = ring_one(x), b = x;
    while (e > 0) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

}  // namespace binomat
