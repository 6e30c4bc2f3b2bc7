#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace zerosum {

/// Exact arbitrary-precision nonnegative integer used for all subset counts.
using Bigint = boost::multiprecision::cpp_int;

inline bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

inline bool is_odd_prime(std::uint64_t m) { return m % 2 == 1 && is_prime(m); }

inline void require_odd_prime(std::int64_t p, const char* who) {
    if (p < 3 || !is_odd_prime(static_cast<std::uint64_t>(p)))
        throw invalid_prime_error(std::string(who) + ": p must be an odd prime, got " +
                                  std::to_string(p));
}

/// Exact binomial coefficient C(m, r); zero when r > m.
inline Bigint binomial(std::uint64_t m, std::uint64_t r) {
    if (r > m) return 0;
    r = std::min(r, m - r);
    Bigint acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc *= m - r + i;
        acc /= i; // exact: acc is C(m - r + i, i) at this point
    }
    return acc;
}

/// base^exp mod m. Requires m < 2^32 so intermediate products fit in 64 bits.
inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) acc = acc * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return acc;
}

/// C(a, b) mod p for 0 <= a, b < p, p an odd prime (one Lucas digit).
inline std::uint32_t binomial_mod_digit(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::uint32_t i = 1; i <= b; ++i) {
        num = num * (a - b + i) % p;
        den = den * i % p;
    }
    return static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
}

/// C(m, r) mod p by Lucas' theorem: the product of digitwise binomials of m
/// and r written in base p.
inline std::uint32_t lucas_binomial_mod_p(std::uint64_t m, std::uint64_t r, std::uint32_t p) {
    require_odd_prime(static_cast<std::int64_t>(p), "lucas_binomial_mod_p");
    std::uint64_t acc = 1;
    while ((m != 0 || r != 0) && acc != 0) {
        const auto md = static_cast<std::uint32_t>(m % p);
        const auto rd = static_cast<std::uint32_t>(r % p);
        acc = acc * binomial_mod_digit(md, rd, p) % p;
        m /= p;
        r /= p;
    }
    return static_cast<std::uint32_t>(acc);
}

/// Canonical residue of a (possibly negative) value in [0, p).
inline std::uint32_t canonical_residue(std::int64_t v, std::int64_t p) {
    v %= p;
    if (v < 0) v += p;
    return static_cast<std::uint32_t>(v);
}

} // namespace zerosum
