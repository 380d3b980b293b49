#pragma once

// Elementary arithmetic functions shared by the Farey and exponential-sum
// modules. Tables are indexed by n directly; entry 0 is unused.

#include <cstdint>
#include <vector>

namespace fareysum::arith {

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Euler's totient for 0..limit.
std::vector<std::int64_t> totient_table(std::int64_t limit);

/// Number of divisors for 0..limit.
std::vector<std::int64_t> divisor_count_table(std::int64_t limit);

/// Number of divisors of a single n, by trial division.
std::int64_t divisor_count(std::int64_t n);

/// Euler's totient of a single n, by trial division.
std::int64_t totient(std::int64_t n);

/// Non-negative residue of a modulo m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace fareysum::arith
