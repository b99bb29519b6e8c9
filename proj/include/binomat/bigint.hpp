#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace binomat {

/// Arbitrary-precision signed integer used throughout the library.
using BigInt = boost::multiprecision::cpp_int;

/// b^e for e >= 0, with the convention 0^0 = 1.
inline BigInt int_pow(const BigInt& base, long long e) {
    if (e < 0) throw std::domain_error("int_pow: negative exponent");
    BigInt acc = 1, b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

/// Deterministic primality by trial division. Complete for n < 10^12
/// (divisors are scanned up to 10^6), which covers every modulus this
/// library is meant for.
inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d : {2LL, 3LL, 5LL}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::int64_t d = 7; d <= 1000000 && d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace binomat
