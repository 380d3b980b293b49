#pragma once

// S(N) = sum of minimal denominators over the N cells ](j-1)/N, j/N], its
// boundary variants, and the exact decomposition of the remainder
// R(N) = S(N) - N * integral_0^1 q(t, 1/N) dt over Farey gaps.
//
// Every quantity other than the integer sums is an exact rational.

#include <cstdint>
#include <vector>

#include "fareysum/fraction.hpp"
#include "fareysum/minden.hpp"

namespace fareysum::sums {

using minden::Variant;

/// q_j(N) for j = 1..N (index j - 1), fast algorithm.
std::vector<std::int64_t> cell_denominators(std::int64_t n, Variant variant = Variant::HalfOpenRight);

/// S(N) and its variants by direct per-cell queries.
std::int64_t S_variant(std::int64_t n, Variant variant = Variant::HalfOpenRight);

/// The same sum through S = sum_{k>=0} theta(k), with theta counted from
/// the Farey gaps (see theta_cells). O(N^3); meant for cross-checks.
std::int64_t S_via_theta(std::int64_t n, Variant variant = Variant::HalfOpenRight);

enum class ThetaRoute {
    DirectCount,  // #{j : q_j(N) > k} from per-cell queries
    GapFormula,   // N * mes X(1/N) + telescoped fractional parts over F_k
};

/// #{j : q_j(N) > k} for 0 <= k <= N.
std::int64_t theta_N(std::int64_t n, std::int64_t k, ThetaRoute route = ThetaRoute::DirectCount);

/// theta_N(k) for all k = 0..N, counted from the per-cell denominators.
std::vector<std::int64_t> theta_table(std::int64_t n, Variant variant = Variant::HalfOpenRight);

/// Number of cells of the given variant that miss F_k, counted gap by gap
/// of F_k with the lattice counter. Any k >= 0 (k = 0 gives N).
std::int64_t theta_cells(std::int64_t n, std::int64_t k, Variant variant);

/// Exact per-order quantities from one pass over the gaps of F_k:
///   nu    = measure{t in [0,1[ : q(t, 1/N) > k}
///   xi    = sum over gaps >= 1/N of {-N rho_i} - {-N rho_{i-1}}
///   sigma = sum of B1(N rho_i) over i in [1, A(k) - 1] whose left gap is
///           >= 1/N and right gap < 1/N
struct OrderScan {
    std::int64_t k = 0;
    Exact nu;
    Exact xi;
    Exact sigma;
};

/// Requires 1 <= k <= N.
OrderScan scan_order(std::int64_t n, std::int64_t k);

Exact nu_N(std::int64_t n, std::int64_t k);
Exact xi_N(std::int64_t n, std::int64_t k);
Exact sigma_N(std::int64_t n, std::int64_t k);

/// integral_0^1 q(t, 1/N) dt = sum_{k=0}^N nu_N(k), exactly.
Exact integral_q(std::int64_t n);

/// Same integral in floating point through the adjacent-pair form
/// N + sum_{rs<=N, (r,s)=1} min(r,s) (N/(rs) - 1), divided by N.
/// O(N log N); used by sweeps far beyond the exact budget.
double integral_q_fast(std::int64_t n);

enum class RRoute {
    Definition,          // S(N) - N * integral
    DistributionSum,     // sum_{k=1}^N theta_N(k) - N nu_N(k)
};

Exact R_N(std::int64_t n, RRoute route = RRoute::Definition);

struct TParts {
    Exact T;    // sum_k sigma_N(k)
    Exact T1;   // pairs r < s
    Exact T11;  // r < s, floor((k + r)/s) = 1
    Exact T12;  // r < s, floor((k + r)/s) = 2
    Exact T2;   // pairs s < r
};

/// All five parts by direct summation; T from the Farey scans, the others
/// from the coprime-pair double sums.
TParts T_parts(std::int64_t n);

/// T11 regrouped as sum over s > sqrt(N), r <= min(N/s, s - (N+1)/s) of r B1(N r̄/s).
Exact T11_grouped(std::int64_t n);

/// The companion double sum over s/2 < r < s, rs <= N, s(s-r) > N that
/// drops out of T11. Returns its value and the number of terms.
struct EmptySumProbe {
    Exact value;
    std::int64_t terms = 0;
};
EmptySumProbe T11_upper_half_sum(std::int64_t n);

/// T12 as 2 * sum over s/2 < r <= min(s, N/s, 2s - (N+1)/s) of (r - s/2) B1(N r̄/s).
Exact T12_grouped(std::int64_t n);

/// T2 grouped by j = floor((k + r)/s), j = 2..2N, each group
/// sum of (2r - (j-1)s) B1(N r̄/s) over s < r, rs <= N, (j-1)s/2 < r <= js/2,
/// s(js - r) > N. by_j[j] holds group j (entries 0 and 1 unused).
struct GroupedT2 {
    Exact total;
    std::vector<Exact> by_j;
};
GroupedT2 T2_grouped(std::int64_t n);

enum class GapSide { Upper, Lower };

/// Upper: S~(N) - S(N) (open cells). Lower: S(N) - S̄(N) (closed cells).
std::int64_t variant_gap(std::int64_t n, GapSide which);

/// sum over rs <= N, (r,s) = 1, s | N of min(r, s).
std::int64_t variant_gap_divisor_sum(std::int64_t n);

struct SumReport {
    std::int64_t N = 0;
    std::int64_t S = 0;
    std::int64_t S_bar = 0;
    std::int64_t S_star = 0;
    std::int64_t S_tilde = 0;
    Exact integral;
    Exact R;
    Exact T;
    Exact T1;
    Exact T11;
    Exact T12;
    Exact T2;
};

SumReport sum_report(std::int64_t n);

/// Every exact identity evaluated through independent routes for one N.
struct IdentityCheck {
    std::int64_t N = 0;
    Exact R_definition;
    Exact R_distribution;
    TParts parts;
    Exact T_from_xi;                // -1/2 sum_k xi_N(k)
    std::int64_t theta_mismatch_k = -1;  // first k with direct != formula
    std::int64_t xi_sigma_mismatch_k = -1;
    std::int64_t S_direct = 0;
    std::int64_t S_theta = 0;

    bool R_routes_agree() const { return R_definition == R_distribution; }
    bool R_is_minus_two_T() const { return R_definition == -2 * parts.T; }
    bool T_split() const { return parts.T == parts.T1 + parts.T2; }
    bool T1_split() const { return parts.T1 == parts.T11 + parts.T12; }
    bool ok() const {
        return R_routes_agree() && R_is_minus_two_T() && T_split() && T1_split() &&
               theta_mismatch_k < 0 && xi_sigma_mismatch_k < 0 && S_direct == S_theta &&
               T_from_xi == parts.T;
    }
};

IdentityCheck check_identities(std::int64_t n);

}  // namespace fareysum::sums
