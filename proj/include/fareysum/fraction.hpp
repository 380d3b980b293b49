#pragma once

// Machine-width reduced fractions and the arbitrary-precision scalar used by
// every exactly-checked sum.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace fareysum {

using Exact = mpq_class;

/// Reduced rational num/den with den >= 1. Zero is 0/1.
class Fraction {
public:
    constexpr Fraction() = default;
    Fraction(std::int64_t num);  // NOLINT(google-explicit-constructor)
    Fraction(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    std::int64_t floor() const;
    std::int64_t ceil() const;

    Exact to_exact() const;
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    /// Parses "p/q" or "p".
    static Fraction parse(const std::string& text);

    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator-(const Fraction& a) { return Fraction(-a.num_, a.den_); }

    friend bool operator==(const Fraction& a, const Fraction& b) = default;
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

/// num/den as a canonical exact rational.
Exact exact_ratio(std::int64_t num, std::int64_t den);

/// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Exact& x);

/// floor and ceiling of an exact rational.
mpz_class floor(const Exact& x);
mpz_class ceil(const Exact& x);

}  // namespace fareysum
