#include "fareysum/expsums.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fareysum/arith.hpp"
#include "fareysum/farey.hpp"

namespace fareysum::expsums {

namespace {

using i128 = __int128;

std::int64_t wrap(std::int64_t n, std::int64_t q) { return arith::mod(n, q); }

void require_period(std::int64_t q, const char* what) {
    if (q < 1) throw std::domain_error(std::string(what) + ": period must be >= 1");
}

mpz_class to_mpz(i128 v) {
    const bool negative = v < 0;
    unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : v;
    const auto hi = static_cast<unsigned long>(u >> 64);
    const auto lo = static_cast<unsigned long>(u);
    mpz_class z(hi);
    z <<= 64;
    z += lo;
    return negative ? mpz_class(-z) : z;
}

Exact exact_from(i128 num, i128 den) {
    Exact x(to_mpz(num), to_mpz(den));
    x.canonicalize();
    return x;
}

// e(-m/q) for m = 0..q-1.
std::vector<Complex> root_table(std::int64_t q, int sign) {
    std::vector<Complex> table(static_cast<std::size_t>(q));
    for (std::int64_t m = 0; m < q; ++m) table[m] = unit_root(sign * m, q);
    return table;
}

}  // namespace

PeriodicFunction::PeriodicFunction(std::vector<Complex> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::domain_error("PeriodicFunction: empty period");
}

Complex PeriodicFunction::operator()(std::int64_t n) const { return values_[wrap(n, period())]; }

bool PeriodicFunction::is_even(double tol) const {
    for (std::int64_t n = 0; n < period(); ++n) {
        if (std::abs((*this)(n) - (*this)(-n)) > tol) return false;
    }
    return true;
}

bool PeriodicFunction::is_odd(double tol) const {
    for (std::int64_t n = 0; n < period(); ++n) {
        if (std::abs((*this)(n) + (*this)(-n)) > tol) return false;
    }
    return true;
}

double PeriodicFunction::max_distance(const PeriodicFunction& other) const {
    if (other.period() != period()) throw std::invalid_argument("period mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        worst = std::max(worst, std::abs(values_[i] - other.values_[i]));
    }
    return worst;
}

Complex unit_root(std::int64_t m, std::int64_t q) {
    require_period(q, "unit_root");
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(wrap(m, q)) /
                         static_cast<double>(q);
    return {std::cos(angle), std::sin(angle)};
}

PeriodicFunction dft(const PeriodicFunction& f) {
    const std::int64_t q = f.period();
    const auto roots = root_table(q, -1);
    std::vector<Complex> out(static_cast<std::size_t>(q));
    for (std::int64_t x = 0; x < q; ++x) {
        Complex acc = 0.0;
        for (std::int64_t n = 1; n <= q; ++n) acc += f(n) * roots[(n * x) % q];
        out[x] = acc;
    }
    return PeriodicFunction(std::move(out));
}

PeriodicFunction idft(const PeriodicFunction& transform) {
    const std::int64_t q = transform.period();
    const auto roots = root_table(q, +1);
    std::vector<Complex> out(static_cast<std::size_t>(q));
    for (std::int64_t n = 0; n < q; ++n) {
        Complex acc = 0.0;
        for (std::int64_t x = 1; x <= q; ++x) acc += transform(x) * roots[(n * x) % q];
        out[n] = acc / static_cast<double>(q);
    }
    return PeriodicFunction(std::move(out));
}

Complex kloosterman_complex(std::int64_t a, std::int64_t b, std::int64_t q) {
    require_period(q, "kloosterman");
    const std::int64_t ar = wrap(a, q);
    const std::int64_t br = wrap(b, q);
    Complex acc = 0.0;
    for (std::int64_t n = 1; n <= q; ++n) {
        if (std::gcd(n, q) != 1) continue;
        const std::int64_t nbar = farey::inv_mod(n, q);
        acc += unit_root((ar * n + br * nbar) % q, q);
    }
    return acc;
}

double kloosterman(std::int64_t a, std::int64_t b, std::int64_t q) {
    const Complex k = kloosterman_complex(a, b, q);
    if (std::abs(k.imag()) >= kTransformTolerance) {
        throw std::runtime_error("kloosterman: imaginary part " + std::to_string(k.imag()) +
                                 " for q=" + std::to_string(q));
    }
    return k.real();
}

double ramanujan(std::int64_t a, std::int64_t q) { return kloosterman(a, 0, q); }

double weil_bound(std::int64_t a, std::int64_t b, std::int64_t q) {
    require_period(q, "weil_bound");
    const auto g = std::gcd(std::gcd(a, b), q);
    return std::sqrt(static_cast<double>(g)) * static_cast<double>(arith::divisor_count(q)) *
           std::sqrt(static_cast<double>(q));
}

Exact b1(const Exact& x) {
    if (x.get_den() == 1) return Exact(0);
    Exact frac = x - Exact(fareysum::floor(x));
    return frac - exact_ratio(1, 2);
}

std::int64_t b1_scaled(std::int64_t num, std::int64_t den) {
    const std::int64_t m = wrap(num, den);
    return m == 0 ? 0 : 2 * m - den;
}

Exact b1_ratio(std::int64_t num, std::int64_t den) {
    if (den < 1) throw std::domain_error("b1_ratio: denominator must be positive");
    return exact_ratio(b1_scaled(num, den), 2 * den);
}

PeriodicFunction b1_table(std::int64_t q) {
    require_period(q, "b1_table");
    std::vector<Complex> values(static_cast<std::size_t>(q));
    for (std::int64_t n = 0; n < q; ++n) {
        values[n] = static_cast<double>(b1_scaled(n, q)) / static_cast<double>(2 * q);
    }
    return PeriodicFunction(std::move(values));
}

Complex b1_hat_closed(std::int64_t x, std::int64_t q) {
    require_period(q, "b1_hat_closed");
    if (wrap(x, q) == 0) return 0.0;
    const Complex z = unit_root(x, q);
    return (1.0 + z) / (2.0 * (1.0 - z));
}

Complex inverse_twisted_sum(const PeriodicFunction& f, std::int64_t lo, std::int64_t hi,
                            std::int64_t n) {
    const std::int64_t q = f.period();
    Complex acc = 0.0;
    for (std::int64_t m = lo; m <= hi; ++m) {
        if (std::gcd(m, q) != 1) continue;
        acc += f(n * farey::inv_mod(m, q));
    }
    return acc;
}

double inverse_twisted_bound(const PeriodicFunction& f) {
    const std::int64_t q = f.period();
    const auto transform = dft(f);
    double mass = 0.0;
    for (std::int64_t y = 1; y < q; ++y) mass += std::abs(transform(y));
    return static_cast<double>(arith::divisor_count(q)) * beta(q) /
           std::sqrt(static_cast<double>(q)) * mass;
}

Exact twisted_b1_sum(std::int64_t lo, std::int64_t hi, std::int64_t q, std::int64_t n) {
    require_period(q, "twisted_b1_sum");
    i128 acc = 0;
    for (std::int64_t m = lo; m <= hi; ++m) {
        if (std::gcd(m, q) != 1) continue;
        acc += b1_scaled(wrap(n, q) * farey::inv_mod(m, q), q);
    }
    return exact_from(acc, 2 * static_cast<i128>(q));
}

double twisted_b1_bound(std::int64_t q) {
    require_period(q, "twisted_b1_bound");
    const double qd = static_cast<double>(q);
    return 0.5 * std::sqrt(qd) * static_cast<double>(arith::divisor_count(q)) * beta(q) *
           std::log(qd);
}

Exact weighted_b1_sum(std::int64_t s, const Fraction& a, const Fraction& b, std::int64_t n) {
    require_period(s, "weighted_b1_sum");
    if (!(a < b)) throw std::domain_error("weighted_b1_sum: need a < b");
    // (r - a) B1(...) = (r*ad - an)/ad * scaled/(2s)
    i128 acc = 0;
    for (std::int64_t r = a.floor() + 1; r <= b.floor(); ++r) {
        if (std::gcd(r, s) != 1) continue;
        const i128 weight = static_cast<i128>(r) * a.den() - a.num();
        acc += weight * b1_scaled(farey::inv_mod(r, s) * wrap(n, s), s);
    }
    return exact_from(acc, static_cast<i128>(a.den()) * 2 * s);
}

double weighted_b1_bound(std::int64_t s, const Fraction& a, const Fraction& b) {
    require_period(s, "weighted_b1_bound");
    const double sd = static_cast<double>(s);
    return (b - a).to_double() * std::sqrt(sd) * static_cast<double>(arith::divisor_count(s)) *
           beta(s) * std::log(sd);
}

double geometric_sum_abs(std::int64_t lo, std::int64_t hi, const Fraction& alpha) {
    Complex acc = 0.0;
    for (std::int64_t m = lo; m <= hi; ++m) {
        acc += unit_root(static_cast<std::int64_t>(
                             (static_cast<i128>(m) * alpha.num()) % alpha.den()),
                         alpha.den());
    }
    return std::abs(acc);
}

bool geometric_sum_bound_check(std::int64_t lo, std::int64_t hi, const Fraction& alpha) {
    if (!(alpha > Fraction(0) && alpha < Fraction(1))) {
        throw std::domain_error("geometric_sum_bound_check: need 0 < alpha < 1");
    }
    const double rhs = 1.0 / std::sin(std::numbers::pi * alpha.to_double());
    return geometric_sum_abs(lo, hi, alpha) <= rhs + kInequalitySlack;
}

double cosecant_sum(std::int64_t q) {
    require_period(q, "cosecant_sum");
    double acc = 0.0;
    for (std::int64_t m = 1; m < q; ++m) {
        acc += 1.0 / std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(q));
    }
    return acc;
}

double beta(std::int64_t q) {
    require_period(q, "beta");
    double acc = 0.0;
    for (std::int64_t d = 1; d <= q; ++d) {
        if (q % d == 0) {
            acc += std::log(static_cast<double>(q / d)) / std::sqrt(static_cast<double>(d));
        }
    }
    return acc;
}

ArithmeticTables::ArithmeticTables(std::int64_t limit_)
    : limit(limit_),
      tau(arith::divisor_count_table(limit_)),
      phi(arith::totient_table(limit_)),
      beta(static_cast<std::size_t>(limit_) + 1, 0.0) {
    std::vector<double> logs(static_cast<std::size_t>(limit) + 1, 0.0);
    for (std::int64_t m = 1; m <= limit; ++m) logs[m] = std::log(static_cast<double>(m));
    for (std::int64_t d = 1; d <= limit; ++d) {
        const double weight = 1.0 / std::sqrt(static_cast<double>(d));
        for (std::int64_t m = d, quotient = 1; m <= limit; m += d, ++quotient) {
            beta[m] += logs[quotient] * weight;
        }
    }
}

double tau_beta_summatory(std::int64_t x) {
    if (x < 1) throw std::domain_error("tau_beta_summatory: x must be >= 1");
    const ArithmeticTables tables(x);
    double acc = 0.0;
    for (std::int64_t n = 1; n <= x; ++n) {
        acc += static_cast<double>(tables.tau[n]) * tables.beta[n];
    }
    return acc;
}

double abs_upper(const Exact& x) {
    // mpq_get_d truncates toward zero, so one step up dominates |x|.
    const double truncated = std::fabs(x.get_d());
    return std::nextafter(truncated, std::numeric_limits<double>::infinity());
}

bool within_bound(const Exact& lhs, double bound) {
    if (lhs == 0) return bound >= -kInequalitySlack;
    return abs_upper(lhs) <= bound + kInequalitySlack;
}

}  // namespace fareysum::expsums
