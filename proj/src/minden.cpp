#include "fareysum/minden.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fareysum/farey.hpp"

namespace fareysum::minden {

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::HalfOpenRight: return "half-open-right";
        case Variant::HalfOpenLeft: return "half-open-left";
        case Variant::Closed: return "closed";
        case Variant::Open: return "open";
    }
    return "?";
}

Variant parse_variant(std::string_view name) {
    for (Variant v : kAllVariants) {
        if (variant_name(v) == name) return v;
    }
    throw std::invalid_argument("unknown interval variant '" + std::string(name) + "'");
}

namespace {

constexpr bool left_closed(Variant v) { return v == Variant::HalfOpenLeft || v == Variant::Closed; }
constexpr bool right_closed(Variant v) { return v == Variant::HalfOpenRight || v == Variant::Closed; }

// Non-negative rational num/den (den > 0) in the descent; values are never
// reduced since only floors and comparisons are taken.
template <typename Int>
struct Ratio {
    Int num;
    Int den;
};

// Continued-fraction descent for an interval with lo >= 0. hi is absent
// for +infinity. Returns the simplest fraction as (p, q).
template <typename Int>
std::pair<Int, Int> descend(Ratio<Int> lo, std::optional<Ratio<Int>> hi, bool lo_closed,
                            bool hi_closed) {
    std::vector<Int> terms;
    Int terminal;
    while (true) {
        const Int whole = lo.num / lo.den;
        const bool lo_integral = (lo.num % lo.den) == 0;
        // Smallest integer inside the interval, if the upper end permits.
        const Int first = (lo_closed && lo_integral) ? whole : whole + 1;
        if (!hi) {
            terminal = first;
            break;
        }
        const Int scaled = first * hi->den;
        if (scaled < hi->num || (scaled == hi->num && hi_closed)) {
            terminal = first;
            break;
        }
        // No integer inside: the interval sits in [whole, whole + 1] with any
        // integral endpoint excluded. Reflect x -> 1/(x - whole).
        terms.push_back(whole);
        const Ratio<Int> new_lo{hi->den, hi->num - whole * hi->den};
        const Int lo_rest = lo.num - whole * lo.den;
        std::optional<Ratio<Int>> new_hi;
        if (lo_rest != 0) new_hi = Ratio<Int>{lo.den, lo_rest};
        lo = new_lo;
        hi = new_hi;
        std::swap(lo_closed, hi_closed);
    }
    Int p = terminal;
    Int q = 1;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const Int next_p = *it * p + q;
        q = p;
        p = next_p;
    }
    return {p, q};
}

using i128 = __int128;

Fraction simplest_fast(const Interval& in) {
    const std::int64_t shift = in.lo().floor();
    const Fraction lo = in.lo() - Fraction(shift);
    const Fraction hi = in.hi() - Fraction(shift);
    const auto [p, q] = descend<i128>({lo.num(), lo.den()}, Ratio<i128>{hi.num(), hi.den()},
                                      in.lo_closed(), in.hi_closed());
    return Fraction(static_cast<std::int64_t>(p)) * Fraction(1, static_cast<std::int64_t>(q)) +
           Fraction(shift);
}

// Integers p with p/q inside the interval, as a count of lattice points on
// the scaled interval, expressed through the half-open counter.
std::int64_t lattice_count(const Interval& in, std::int64_t q) {
    const Fraction x = in.lo() * Fraction(q);
    const Fraction y = in.hi() * Fraction(q);
    if (x == y) return x.is_integer() ? 1 : 0;
    if (in.lo_closed() && !in.hi_closed()) return farey::ceil_count(x, y);
    if (!in.lo_closed() && in.hi_closed()) return farey::ceil_count(-y, -x);
    if (in.lo_closed()) return farey::ceil_count(x, y) + (y.is_integer() ? 1 : 0);
    return farey::ceil_count(x, y) - (x.is_integer() ? 1 : 0);
}

std::int64_t oracle(const Interval& in) {
    for (std::int64_t q = 1;; ++q) {
        if (lattice_count(in, q) == 0) continue;
        const Fraction x = in.lo() * Fraction(q);
        const Fraction y = in.hi() * Fraction(q);
        const std::int64_t p_first = in.lo_closed() ? x.ceil() : x.floor() + 1;
        const std::int64_t p_last = in.hi_closed() ? y.floor() : y.ceil() - 1;
        for (std::int64_t p = p_first; p <= p_last; ++p) {
            if (std::gcd(p, q) == 1) return q;
        }
    }
}

}  // namespace

Interval::Interval(Fraction lo, Fraction hi, bool lo_closed, bool hi_closed)
    : lo_(lo), hi_(hi), lo_closed_(lo_closed), hi_closed_(hi_closed) {
    if (lo_ > hi_ || (lo_ == hi_ && !(lo_closed_ && hi_closed_))) {
        throw std::invalid_argument("empty interval " + str());
    }
}

Interval::Interval(Fraction lo, Fraction hi, Variant v)
    : Interval(lo, hi, left_closed(v), right_closed(v)) {}

bool Interval::contains(const Fraction& x) const {
    const bool above = lo_closed_ ? x >= lo_ : x > lo_;
    const bool below = hi_closed_ ? x <= hi_ : x < hi_;
    return above && below;
}

bool Interval::includes(const Interval& other) const {
    const bool lo_ok = other.lo_ > lo_ || (other.lo_ == lo_ && (lo_closed_ || !other.lo_closed_));
    const bool hi_ok = other.hi_ < hi_ || (other.hi_ == hi_ && (hi_closed_ || !other.hi_closed_));
    return lo_ok && hi_ok;
}

std::string Interval::str() const {
    return std::string(lo_closed_ ? "[" : "]") + lo_.str() + ", " + hi_.str() +
           (hi_closed_ ? "]" : "[");
}

Fraction simplest_fraction(const Interval& interval) { return simplest_fast(interval); }

std::int64_t min_denominator(const Interval& interval, Algorithm algo) {
    if (algo == Algorithm::Oracle) return oracle(interval);
    return simplest_fast(interval).den();
}

std::int64_t q_t_delta(const Fraction& t, const Fraction& delta, Algorithm algo) {
    if (delta <= Fraction(0)) throw std::domain_error("q_t_delta: delta must be positive");
    return min_denominator(Interval(t - delta, t, false, true), algo);
}

std::int64_t q_j(std::int64_t n, std::int64_t j, Variant variant, Algorithm algo) {
    if (n < 1 || j < 1 || j > n) {
        throw std::domain_error("q_j: need 1 <= j <= N, got j=" + std::to_string(j) +
                                ", N=" + std::to_string(n));
    }
    if (algo == Algorithm::Oracle) {
        return oracle(Interval(Fraction(j - 1, n), Fraction(j, n), variant));
    }
    // Grid cells already have 0 <= lo < hi <= 1 with denominators N, so the
    // descent runs in 64-bit without the generic shift.
    const auto [p, q] = descend<std::int64_t>({j - 1, n}, Ratio<std::int64_t>{j, n},
                                              left_closed(variant), right_closed(variant));
    (void)p;
    return q;
}

}  // namespace fareysum::minden
