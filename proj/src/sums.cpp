#include "fareysum/sums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fareysum/arith.hpp"
#include "fareysum/expsums.hpp"
#include "fareysum/farey.hpp"

namespace fareysum::sums {

namespace {

void require_n(std::int64_t n) {
    if (n < 1) throw std::domain_error("N must be >= 1, got " + std::to_string(n));
}

void require_k(std::int64_t n, std::int64_t k, std::int64_t min_k) {
    require_n(n);
    if (k < min_k || k > n) {
        throw std::domain_error("k=" + std::to_string(k) + " outside [" + std::to_string(min_k) +
                                ", " + std::to_string(n) + "]");
    }
}

// {num/den} for den > 0.
Exact frac_part(std::int64_t num, std::int64_t den) {
    return exact_ratio(arith::mod(num, den), den);
}

// B1(N r̄/s) with r̄ = inv(r, s).
Exact b1_inverse(std::int64_t n, std::int64_t r, std::int64_t s) {
    return expsums::b1_ratio(n % s * farey::inv_mod(r, s), s);
}

std::int64_t theta_from_formula(std::int64_t n, const OrderScan& scan) {
    const Exact value = n * scan.nu + scan.xi;
    if (value.get_den() != 1) {
        throw std::logic_error("theta formula is not integral at N=" + std::to_string(n) +
                               ", k=" + std::to_string(scan.k));
    }
    return value.get_num().get_si();
}

}  // namespace

std::vector<std::int64_t> cell_denominators(std::int64_t n, Variant variant) {
    require_n(n);
    std::vector<std::int64_t> out(static_cast<std::size_t>(n));
    for (std::int64_t j = 1; j <= n; ++j) out[j - 1] = minden::q_j(n, j, variant);
    return out;
}

std::int64_t S_variant(std::int64_t n, Variant variant) {
    require_n(n);
    std::int64_t total = 0;
    for (std::int64_t j = 1; j <= n; ++j) total += minden::q_j(n, j, variant);
    return total;
}

std::int64_t theta_cells(std::int64_t n, std::int64_t k, Variant variant) {
    require_n(n);
    if (k < 0) throw std::domain_error("theta_cells: k must be >= 0");
    if (k == 0) return n;
    const bool lo_closed = variant == Variant::HalfOpenLeft || variant == Variant::Closed;
    const bool hi_closed = variant == Variant::HalfOpenRight || variant == Variant::Closed;
    std::int64_t count = 0;
    farey::for_each_adjacent(k, [&](std::int64_t r, std::int64_t s) {
        if (r * s > n) return;  // gap shorter than a cell
        const std::int64_t b = farey::inv_mod(r, s);
        const std::int64_t a = (b * r - 1) / s;
        // Cells j with lower end (j-1)/N beyond a/r and upper end j/N before b/s.
        const Fraction lower(n * a, r);
        const Fraction upper(n * b, s);
        const std::int64_t j_min = lo_closed ? lower.floor() + 2 : lower.ceil() + 1;
        const std::int64_t j_max = hi_closed ? upper.ceil() - 1 : upper.floor();
        count += std::max<std::int64_t>(0, j_max - j_min + 1);
    });
    return count;
}

std::int64_t S_via_theta(std::int64_t n, Variant variant) {
    require_n(n);
    std::int64_t total = 0;
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t theta = theta_cells(n, k, variant);
        if (theta == 0) break;
        total += theta;
    }
    return total;
}

std::vector<std::int64_t> theta_table(std::int64_t n, Variant variant) {
    const auto q = cell_denominators(n, variant);
    const std::int64_t top = *std::max_element(q.begin(), q.end());
    std::vector<std::int64_t> histogram(static_cast<std::size_t>(std::max(top, n)) + 2, 0);
    for (std::int64_t v : q) ++histogram[v];
    // theta(k) = #{q_j > k}
    std::vector<std::int64_t> theta(static_cast<std::size_t>(n) + 1, 0);
    std::int64_t above = 0;
    for (std::int64_t v = static_cast<std::int64_t>(histogram.size()) - 1; v >= 1; --v) {
        if (v <= n) theta[v] = above;
        above += histogram[v];
    }
    theta[0] = above;
    return theta;
}

OrderScan scan_order(std::int64_t n, std::int64_t k) {
    require_k(n, k, 1);
    OrderScan out;
    out.k = k;
    Exact inverse_gap_total = 0;
    std::int64_t large_gaps = 0;
    std::int64_t r = 1;
    std::int64_t s = k;
    while (true) {
        const bool last = s == 1;
        const std::int64_t t = last ? 0 : farey::step_denominator(k, r, s);
        if (r * s <= n) {
            ++large_gaps;
            inverse_gap_total += exact_ratio(1, r * s);
            const std::int64_t b = farey::inv_mod(r, s);
            const std::int64_t a = (b * r - 1) / s;
            out.xi += frac_part(-n * b, s) - frac_part(-n * a, r);
            if (!last && s * t > n) out.sigma += expsums::b1_ratio(n * b, s);
        }
        if (last) break;
        r = s;
        s = t;
    }
    out.nu = inverse_gap_total - exact_ratio(large_gaps, n);
    return out;
}

Exact nu_N(std::int64_t n, std::int64_t k) {
    require_k(n, k, 0);
    if (k == 0) return Exact(1);
    return scan_order(n, k).nu;
}

Exact xi_N(std::int64_t n, std::int64_t k) { return scan_order(n, k).xi; }

Exact sigma_N(std::int64_t n, std::int64_t k) { return scan_order(n, k).sigma; }

std::int64_t theta_N(std::int64_t n, std::int64_t k, ThetaRoute route) {
    require_k(n, k, 0);
    if (route == ThetaRoute::DirectCount) {
        std::int64_t count = 0;
        for (std::int64_t j = 1; j <= n; ++j) count += minden::q_j(n, j) > k ? 1 : 0;
        return count;
    }
    if (k == 0) return n;
    return theta_from_formula(n, scan_order(n, k));
}

Exact integral_q(std::int64_t n) {
    require_n(n);
    Exact total = 1;  // nu_N(0)
    for (std::int64_t k = 1; k <= n; ++k) total += scan_order(n, k).nu;
    return total;
}

double integral_q_fast(std::int64_t n) {
    require_n(n);
    long double total = static_cast<long double>(n);
    const long double nn = static_cast<long double>(n);
    for (std::int64_t r = 1; r <= n; ++r) {
        for (std::int64_t s = 1; r * s <= n; ++s) {
            if (std::gcd(r, s) != 1) continue;
            total += static_cast<long double>(std::min(r, s)) *
                     (nn / static_cast<long double>(r * s) - 1.0L);
        }
    }
    return static_cast<double>(total / nn);
}

Exact R_N(std::int64_t n, RRoute route) {
    require_n(n);
    if (route == RRoute::Definition) return Exact(S_variant(n)) - n * integral_q(n);
    const auto theta = theta_table(n);
    Exact total = 0;
    for (std::int64_t k = 1; k <= n; ++k) total += theta[k] - n * scan_order(n, k).nu;
    return total;
}

namespace {

// T1, T2, T11, T12 from the coprime-pair double sums; T is left untouched.
void pair_sums(std::int64_t n, TParts& parts) {
    for (std::int64_t r = 1; r <= n; ++r) {
        for (std::int64_t s = 2; r * s <= n; ++s) {
            if (r == s || std::gcd(r, s) != 1) continue;
            const Exact value = b1_inverse(n, r, s);
            if (value == 0) continue;
            if (r < s) {
                std::int64_t hits = 0;
                for (std::int64_t k = s; k < r + s; ++k) {
                    if (s * farey::step_denominator(k, r, s) > n) ++hits;
                }
                parts.T1 += hits * value;
                if (s * (s - r) > n) {
                    const std::int64_t count = std::min(r + s, 2 * s - r) - s;
                    parts.T11 += std::max<std::int64_t>(count, 0) * value;
                }
                if (s * (2 * s - r) > n) {
                    const std::int64_t count = std::min(r + s, 3 * s - r) - (2 * s - r);
                    parts.T12 += std::max<std::int64_t>(count, 0) * value;
                }
            } else {
                std::int64_t hits = 0;
                for (std::int64_t k = r; k < r + s; ++k) {
                    if (s * farey::step_denominator(k, r, s) > n) ++hits;
                }
                parts.T2 += hits * value;
            }
        }
    }
}

}  // namespace

TParts T_parts(std::int64_t n) {
    require_n(n);
    TParts parts;
    for (std::int64_t k = 1; k <= n; ++k) parts.T += scan_order(n, k).sigma;
    pair_sums(n, parts);
    return parts;
}

Exact T11_grouped(std::int64_t n) {
    require_n(n);
    Exact total = 0;
    for (std::int64_t s = 1; s <= n; ++s) {
        if (s * s <= n) continue;
        const std::int64_t r_max = std::min(n / s, (s * s - n - 1) / s);
        for (std::int64_t r = 1; r <= r_max; ++r) {
            if (std::gcd(r, s) != 1) continue;
            total += r * b1_inverse(n, r, s);
        }
    }
    return total;
}

EmptySumProbe T11_upper_half_sum(std::int64_t n) {
    require_n(n);
    EmptySumProbe probe;
    for (std::int64_t s = 2; s <= n; ++s) {
        for (std::int64_t r = s / 2 + 1; r < s && r * s <= n; ++r) {
            if (s * (s - r) <= n || std::gcd(r, s) != 1) continue;
            ++probe.terms;
            probe.value += (2 * s - r - s) * b1_inverse(n, r, s);
        }
    }
    return probe;
}

Exact T12_grouped(std::int64_t n) {
    require_n(n);
    Exact total = 0;
    for (std::int64_t s = 1; s * s <= 2 * n; ++s) {
        const std::int64_t slack = 2 * s * s - n - 1;
        if (slack < 0) continue;
        const std::int64_t r_max = std::min({s, n / s, slack / s});
        for (std::int64_t r = s / 2 + 1; r <= r_max; ++r) {
            if (std::gcd(r, s) != 1) continue;
            // 2 (r - s/2) = 2r - s
            total += (2 * r - s) * b1_inverse(n, r, s);
        }
    }
    return total;
}

GroupedT2 T2_grouped(std::int64_t n) {
    require_n(n);
    GroupedT2 out;
    out.by_j.assign(static_cast<std::size_t>(2 * n) + 1, Exact(0));
    for (std::int64_t j = 2; j <= 2 * n; ++j) {
        for (std::int64_t s = 1; (j - 1) * s * s < 2 * n; ++s) {
            const std::int64_t r_lo = std::max((j - 1) * s / 2 + 1, s + 1);
            const std::int64_t r_hi = std::min(j * s / 2, n / s);
            for (std::int64_t r = r_lo; r <= r_hi; ++r) {
                if (s * (j * s - r) <= n || std::gcd(r, s) != 1) continue;
                out.by_j[j] += (2 * r - (j - 1) * s) * b1_inverse(n, r, s);
            }
        }
        out.total += out.by_j[j];
    }
    return out;
}

std::int64_t variant_gap(std::int64_t n, GapSide which) {
    require_n(n);
    if (which == GapSide::Upper) return S_variant(n, Variant::Open) - S_variant(n);
    return S_variant(n) - S_variant(n, Variant::Closed);
}

std::int64_t variant_gap_divisor_sum(std::int64_t n) {
    require_n(n);
    std::int64_t total = 0;
    for (std::int64_t s = 1; s <= n; ++s) {
        if (n % s != 0) continue;
        for (std::int64_t r = 1; r * s <= n; ++r) {
            if (std::gcd(r, s) == 1) total += std::min(r, s);
        }
    }
    return total;
}

SumReport sum_report(std::int64_t n) {
    require_n(n);
    SumReport rep;
    rep.N = n;
    rep.S = S_variant(n, Variant::HalfOpenRight);
    rep.S_bar = S_variant(n, Variant::Closed);
    rep.S_star = S_variant(n, Variant::HalfOpenLeft);
    rep.S_tilde = S_variant(n, Variant::Open);
    TParts parts;
    Exact integral = 1;
    for (std::int64_t k = 1; k <= n; ++k) {
        const OrderScan scan = scan_order(n, k);
        integral += scan.nu;
        parts.T += scan.sigma;
    }
    pair_sums(n, parts);
    rep.integral = integral;
    rep.R = rep.S - n * integral;
    rep.T = parts.T;
    rep.T1 = parts.T1;
    rep.T11 = parts.T11;
    rep.T12 = parts.T12;
    rep.T2 = parts.T2;
    return rep;
}

IdentityCheck check_identities(std::int64_t n) {
    require_n(n);
    IdentityCheck out;
    out.N = n;
    const auto theta = theta_table(n);
    out.S_direct = S_variant(n);
    out.S_theta = n;  // theta(0)
    Exact integral = 1;
    Exact xi_total = 0;
    bool theta_integral = true;
    for (std::int64_t k = 1; k <= n; ++k) {
        const OrderScan scan = scan_order(n, k);
        integral += scan.nu;
        out.R_distribution += theta[k] - n * scan.nu;
        out.parts.T += scan.sigma;
        xi_total += scan.xi;
        const Exact formula = n * scan.nu + scan.xi;
        if (formula != theta[k] && out.theta_mismatch_k < 0) out.theta_mismatch_k = k;
        if (scan.xi != -2 * scan.sigma && out.xi_sigma_mismatch_k < 0) out.xi_sigma_mismatch_k = k;
        if (formula.get_den() == 1) {
            out.S_theta += formula.get_num().get_si();
        } else {
            theta_integral = false;
        }
    }
    if (!theta_integral) out.S_theta = -1;
    out.R_definition = Exact(out.S_direct) - n * integral;
    out.T_from_xi = -xi_total / 2;
    pair_sums(n, out.parts);
    return out;
}

}  // namespace fareysum::sums
