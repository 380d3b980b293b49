#include "fareysum/farey.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fareysum/arith.hpp"

namespace fareysum::farey {

std::int64_t AdjacentPair::right_numerator() const { return inv_mod(r, s); }

Fraction AdjacentPair::right() const { return Fraction(right_numerator(), s); }

std::int64_t inv_mod(std::int64_t a, std::int64_t q) {
    if (q <= 0) throw std::domain_error("inv_mod: modulus must be positive");
    // Extended Euclid on (a mod q, q), tracking the coefficient of a.
    std::int64_t old_r = arith::mod(a, q), r = q;
    std::int64_t old_x = 1, x = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        old_r -= quot * r;
        std::swap(old_r, r);
        old_x -= quot * x;
        std::swap(old_x, x);
    }
    if (old_r != 1 && q != 1) {
        throw std::domain_error("inv_mod: " + std::to_string(a) + " is not invertible mod " +
                                std::to_string(q));
    }
    const std::int64_t b = arith::mod(old_x, q);
    return b == 0 ? q : b;
}

std::int64_t ceil_count(const Fraction& a, const Fraction& b) {
    if (a > b) return 0;
    return b.ceil() - a.ceil();
}

bool is_adjacent(std::int64_t k, std::int64_t r, std::int64_t s) {
    return r >= 1 && s >= 1 && std::gcd(r, s) == 1 && std::max(r, s) <= k && k < r + s;
}

std::int64_t next_denominator(std::int64_t k, std::int64_t r, std::int64_t s) {
    if (!is_adjacent(k, r, s)) {
        throw std::domain_error("next_denominator: (" + std::to_string(r) + ", " +
                                std::to_string(s) + ") are not adjacent denominators in F_" +
                                std::to_string(k));
    }
    return step_denominator(k, r, s);
}

std::int64_t next_denominator_fractional(std::int64_t k, std::int64_t r, std::int64_t s) {
    if (!is_adjacent(k, r, s)) {
        throw std::domain_error("next_denominator_fractional: pair not adjacent");
    }
    // s * {(k + r)/s} is the remainder of k + r modulo s.
    return k - (k + r) % s;
}

std::vector<Fraction> farey_sequence(std::int64_t k) {
    if (k < 1) throw std::domain_error("farey_sequence: order must be >= 1");
    std::vector<Fraction> out;
    out.reserve(static_cast<std::size_t>(totient_summatory(k)) + 1);
    out.emplace_back(0);
    for_each_adjacent(k, [&](std::int64_t r, std::int64_t s) {
        out.emplace_back(inv_mod(r, s), s);
    });
    return out;
}

std::vector<AdjacentPair> adjacent_pairs(std::int64_t k) {
    if (k < 1) throw std::domain_error("adjacent_pairs: order must be >= 1");
    std::vector<AdjacentPair> out;
    out.reserve(static_cast<std::size_t>(totient_summatory(k)));
    for_each_adjacent(k, [&](std::int64_t r, std::int64_t s) { out.push_back({r, s, k}); });
    return out;
}

std::int64_t totient_summatory(std::int64_t x) {
    if (x < 1) throw std::domain_error("totient_summatory: x must be >= 1");
    const auto phi = arith::totient_table(x);
    return std::accumulate(phi.begin() + 1, phi.end(), std::int64_t{0});
}

}  // namespace fareysum::farey
