#pragma once

// Minimal denominator q(E): the least q >= 1 such that some p/q lies in E.
//
// Two algorithms are provided. The oracle scans q = 1, 2, ... and is only
// meant for cross-checking. The fast algorithm walks the continued fraction
// of the interval (the Stern-Brocot descent with integer-sized steps) and
// needs O(log max-denominator) divisions.

#include <cstdint>
#include <string_view>

#include "fareysum/fraction.hpp"

namespace fareysum::minden {

/// Boundary flags of the four interval shapes around ](j-1)/N, j/N].
enum class Variant {
    HalfOpenRight,  // ]a, b]
    HalfOpenLeft,   // [a, b[
    Closed,         // [a, b]
    Open,           // ]a, b[
};

inline constexpr Variant kAllVariants[] = {Variant::HalfOpenRight, Variant::HalfOpenLeft,
                                           Variant::Closed, Variant::Open};

std::string_view variant_name(Variant v);
/// Throws std::invalid_argument on an unknown name.
Variant parse_variant(std::string_view name);

enum class Algorithm { Oracle, Fast };

/// Interval with rational endpoints and independent boundary flags.
/// Either lo < hi, or lo == hi with both ends closed (a single point).
class Interval {
public:
    Interval(Fraction lo, Fraction hi, bool lo_closed, bool hi_closed);
    Interval(Fraction lo, Fraction hi, Variant v);

    const Fraction& lo() const { return lo_; }
    const Fraction& hi() const { return hi_; }
    bool lo_closed() const { return lo_closed_; }
    bool hi_closed() const { return hi_closed_; }

    bool contains(const Fraction& x) const;
    /// Whether other is a subset of *this.
    bool includes(const Interval& other) const;

    std::string str() const;

private:
    Fraction lo_;
    Fraction hi_;
    bool lo_closed_;
    bool hi_closed_;
};

std::int64_t min_denominator(const Interval& interval, Algorithm algo = Algorithm::Fast);

/// A fraction of least denominator in the interval (the shallowest
/// Stern-Brocot node after an integer shift). Fast algorithm.
Fraction simplest_fraction(const Interval& interval);

/// q(]t - delta, t]). Throws std::domain_error when delta <= 0.
std::int64_t q_t_delta(const Fraction& t, const Fraction& delta,
                       Algorithm algo = Algorithm::Fast);

/// Minimal denominator of the j-th cell of the uniform grid of step 1/N,
/// with the boundary flags of variant. Throws std::domain_error unless
/// 1 <= j <= N.
std::int64_t q_j(std::int64_t n, std::int64_t j, Variant variant = Variant::HalfOpenRight,
                 Algorithm algo = Algorithm::Fast);

}  // namespace fareysum::minden
