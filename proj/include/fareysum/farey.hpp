#pragma once

// Farey sequences F_k restricted to [0,1], driven by the next-denominator
// recurrence. Consecutive members a/r < b/s satisfy b*r - a*s = 1 and
// r + s > k, so a step is fully described by the denominator pair (r, s)
// and the right-hand numerator is recovered as b = inv(r, s).
//
// Orders are machine integers; k + r <= 2k must fit in int64, which holds
// comfortably for every order below 2e9.

#include <cstdint>
#include <vector>

#include "fareysum/fraction.hpp"

namespace fareysum::farey {

/// Denominators of two consecutive members of F_k: r on the left, s on the
/// right. The right-hand member is inv(r, s) / s and the gap is 1/(r*s).
struct AdjacentPair {
    std::int64_t r = 1;
    std::int64_t s = 1;
    std::int64_t k = 1;

    std::int64_t right_numerator() const;
    Fraction right() const;
    Fraction gap() const { return Fraction(1, r * s); }

    friend bool operator==(const AdjacentPair&, const AdjacentPair&) = default;
};

/// The b in (0, q] with a*b = 1 (mod q). Throws std::domain_error when
/// q <= 0 or gcd(a, q) != 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t q);

/// Number of integers in [a, b[: 0 when a > b, ceil(b) - ceil(a) otherwise.
std::int64_t ceil_count(const Fraction& a, const Fraction& b);

/// Denominator of the member of F_k that follows two consecutive members
/// with denominators r, s. Throws std::domain_error unless gcd(r, s) = 1
/// and max(r, s) <= k < r + s.
std::int64_t next_denominator(std::int64_t k, std::int64_t r, std::int64_t s);

/// Same value through the second closed form k - s*{(k + r)/s}.
std::int64_t next_denominator_fractional(std::int64_t k, std::int64_t r, std::int64_t s);

/// The unchecked recurrence used inside sweeps.
inline std::int64_t step_denominator(std::int64_t k, std::int64_t r, std::int64_t s) {
    return s * ((k + r) / s) - r;
}

/// Whether (r, s) can be the denominators of consecutive members of F_k.
bool is_adjacent(std::int64_t k, std::int64_t r, std::int64_t s);

/// F_k ∩ [0,1] in increasing order: A(k) + 1 fractions from 0/1 to 1/1.
std::vector<Fraction> farey_sequence(std::int64_t k);

/// The A(k) consecutive-denominator pairs of F_k ∩ [0,1], left to right.
std::vector<AdjacentPair> adjacent_pairs(std::int64_t k);

/// Calls visit(r, s) for each consecutive pair of F_k ∩ [0,1] without
/// materialising the sequence.
template <typename Visitor>
void for_each_adjacent(std::int64_t k, Visitor&& visit) {
    std::int64_t r = 1;
    std::int64_t s = k;
    while (true) {
        visit(r, s);
        if (s == 1) break;
        const std::int64_t t = step_denominator(k, r, s);
        r = s;
        s = t;
    }
}

/// A(x) = sum of phi(n) for n <= x, i.e. the number of steps in F_x ∩ [0,1].
std::int64_t totient_summatory(std::int64_t x);

}  // namespace fareysum::farey
