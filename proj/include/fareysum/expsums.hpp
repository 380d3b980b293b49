#pragma once

// Discrete Fourier analysis on Z/qZ: the transform pair, Kloosterman and
// Ramanujan sums, the first Bernoulli function B1 and the bounds that
// control sums of B1 twisted by modular inversion. The transform works on
// double-precision complex tables; every B1 sum is exact.

#include <complex>
#include <cstdint>
#include <vector>

#include "fareysum/fraction.hpp"

namespace fareysum::expsums {

using Complex = std::complex<double>;

/// A function Z -> C of period q, stored as values at residues 0..q-1
/// (residue 0 stands for q).
class PeriodicFunction {
public:
    explicit PeriodicFunction(std::vector<Complex> values);

    std::int64_t period() const { return static_cast<std::int64_t>(values_.size()); }
    /// f(n) for any integer n.
    Complex operator()(std::int64_t n) const;
    const std::vector<Complex>& values() const { return values_; }

    bool is_even(double tol = 1e-9) const;
    bool is_odd(double tol = 1e-9) const;

    /// Largest |f(n) - g(n)| over one period. Periods must match.
    double max_distance(const PeriodicFunction& other) const;

private:
    std::vector<Complex> values_;
};

/// e(x) = exp(2 i pi x) evaluated at x = m/q with m reduced first.
Complex unit_root(std::int64_t m, std::int64_t q);

/// f^(x) = sum_{n=1}^q f(n) e(-nx/q). Direct O(q^2) summation.
PeriodicFunction dft(const PeriodicFunction& f);

/// f(n) = (1/q) sum_{x=1}^q F(x) e(nx/q).
PeriodicFunction idft(const PeriodicFunction& transform);

/// K(a, b; q) = sum over units n mod q of e((a n + b n̄)/q), as a complex
/// number before the imaginary part is discarded.
Complex kloosterman_complex(std::int64_t a, std::int64_t b, std::int64_t q);

/// Real value of K(a, b; q). Throws std::runtime_error if the computed
/// imaginary part is not below 1e-9.
double kloosterman(std::int64_t a, std::int64_t b, std::int64_t q);

/// Ramanujan sum c_q(a) = K(a, 0; q).
double ramanujan(std::int64_t a, std::int64_t q);

/// gcd(a, b, q)^(1/2) tau(q) sqrt(q).
double weil_bound(std::int64_t a, std::int64_t b, std::int64_t q);

/// B1(x) = 0 on integers, {x} - 1/2 otherwise.
Exact b1(const Exact& x);
/// B1(num/den) for machine integers, den > 0.
Exact b1_ratio(std::int64_t num, std::int64_t den);
/// 2 den B1(num/den) as an integer (the numerator over the denominator 2 den).
std::int64_t b1_scaled(std::int64_t num, std::int64_t den);

/// The table n -> B1(n/q) as a periodic function.
PeriodicFunction b1_table(std::int64_t q);

/// Closed form of the transform of n -> B1(n/q):
/// 0 when q | x, else (1 + e(x/q)) / (2 (1 - e(x/q))).
Complex b1_hat_closed(std::int64_t x, std::int64_t q);

/// Sum of f(N n̄) over n in [lo, hi] coprime to q, n̄ = inv(n, q).
Complex inverse_twisted_sum(const PeriodicFunction& f, std::int64_t lo, std::int64_t hi,
                            std::int64_t n);

/// tau(q) beta(q) / sqrt(q) * sum_{y=1}^{q-1} |f^(y)|, the bound on
/// inverse_twisted_sum for odd f.
double inverse_twisted_bound(const PeriodicFunction& f);

/// Exact sum of B1(N n̄/q) over n in [lo, hi] coprime to q.
Exact twisted_b1_sum(std::int64_t lo, std::int64_t hi, std::int64_t q, std::int64_t n);

/// (1/2) sqrt(q) tau(q) beta(q) ln q.
double twisted_b1_bound(std::int64_t q);

/// Exact sum of (r - a) B1(r̄ N/s) over a < r <= b coprime to s.
Exact weighted_b1_sum(std::int64_t s, const Fraction& a, const Fraction& b, std::int64_t n);

/// (b - a) sqrt(s) tau(s) beta(s) ln s.
double weighted_b1_bound(std::int64_t s, const Fraction& a, const Fraction& b);

/// Whether |sum_{n=lo}^{hi} e(n alpha)| <= 1/sin(pi alpha), with 1e-12 slack.
/// Requires 0 < alpha < 1.
bool geometric_sum_bound_check(std::int64_t lo, std::int64_t hi, const Fraction& alpha);

/// |sum_{n=lo}^{hi} e(n alpha)| computed directly.
double geometric_sum_abs(std::int64_t lo, std::int64_t hi, const Fraction& alpha);

/// sum_{m=1}^{q-1} 1/sin(pi m/q).
double cosecant_sum(std::int64_t q);

/// beta(q) = sum_{d | q} ln(q/d)/sqrt(d).
double beta(std::int64_t q);

/// sum_{n <= x} tau(n) beta(n).
double tau_beta_summatory(std::int64_t x);

/// Sieved tau, phi and beta for 0..limit (entry 0 unused).
struct ArithmeticTables {
    std::int64_t limit = 0;
    std::vector<std::int64_t> tau;
    std::vector<std::int64_t> phi;
    std::vector<double> beta;

    explicit ArithmeticTables(std::int64_t limit);
};

/// Exact |x| rounded up to the next double, for one-sided comparisons
/// against floating bounds.
double abs_upper(const Exact& x);

/// Whether an exact left-hand side is within a floating bound, with the
/// 1e-12 slack used for all analytic inequalities.
bool within_bound(const Exact& lhs, double bound);

inline constexpr double kTransformTolerance = 1e-9;
inline constexpr double kInequalitySlack = 1e-12;

}  // namespace fareysum::expsums
