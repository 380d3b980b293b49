#include "fareysum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "fareysum/arith.hpp"
#include "fareysum/expsums.hpp"
#include "fareysum/farey.hpp"
#include "fareysum/minden.hpp"
#include "fareysum/sums.hpp"

namespace fareysum::verify {

using std::int64_t;
using std::to_string;
using fareysum::to_string;

void SuiteResult::expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    if (failures == 0) first_counterexample = describe();
    ++failures;
}

void Options::set_max_n(int64_t max_n) {
    farey_max_k = max_n;
    minden_reflection_max_n = max_n;
    minden_ordering_max_n = max_n;
    minden_anchor_max_n = max_n;
    identities_max_n = max_n;
    variants_max_n = max_n;
}

namespace {

std::vector<Fraction> brute_farey(int64_t k) {
    std::set<Fraction> all;
    for (int64_t q = 1; q <= k; ++q) {
        for (int64_t p = 0; p <= q; ++p) all.insert(Fraction(p, q));
    }
    return {all.begin(), all.end()};
}

}  // namespace

SuiteResult verify_farey(const Options& opts) {
    SuiteResult res;
    res.name = "farey";
    for (int64_t k = 1; k <= opts.farey_max_k; ++k) {
        const auto seq = farey::farey_sequence(k);
        const int64_t a_k = farey::totient_summatory(k);
        res.expect(static_cast<int64_t>(seq.size()) == a_k + 1,
                   [&] { return "|F_" + to_string(k) + "| != A(k)+1"; });
        res.expect(seq == brute_farey(k),
                   [&] { return "F_" + to_string(k) + " differs from sorted enumeration"; });
        for (std::size_t i = 1; i < seq.size(); ++i) {
            const auto& left = seq[i - 1];
            const auto& right = seq[i];
            res.expect(right.num() * left.den() - left.num() * right.den() == 1 &&
                           left.den() + right.den() > k,
                       [&] {
                           return "F_" + to_string(k) + ": " + left.str() + " < " + right.str() +
                                  " violates br - as = 1, r + s > k";
                       });
        }
        std::set<std::pair<int64_t, int64_t>> from_sequence;
        for (const auto& p : farey::adjacent_pairs(k)) {
            from_sequence.insert({p.r, p.s});
            res.expect(farey::next_denominator_fractional(k, p.r, p.s) ==
                           farey::step_denominator(k, p.r, p.s),
                       [&] { return "closed forms of the recurrence disagree at k=" + to_string(k); });
        }
        std::set<std::pair<int64_t, int64_t>> from_loop;
        for (int64_t r = 1; r <= k; ++r) {
            for (int64_t s = 1; s <= k; ++s) {
                if (std::gcd(r, s) == 1 && k < r + s) from_loop.insert({r, s});
            }
        }
        res.expect(from_sequence == from_loop,
                   [&] { return "adjacent pairs of F_" + to_string(k) + " != coprime pair set"; });
    }
    return res;
}

SuiteResult verify_minden(const Options& opts) {
    using minden::Algorithm;
    using minden::Interval;
    using minden::Variant;
    SuiteResult res;
    res.name = "minden";
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int64_t> den_dist(1, opts.minden_max_endpoint_den);
    auto random_point = [&] {
        const int64_t d = den_dist(rng);
        std::uniform_int_distribution<int64_t> num_dist(-2 * d, 2 * d);
        return Fraction(num_dist(rng), d);
    };
    auto near_point = [&](const Fraction& a) {
        const int64_t d = den_dist(rng);
        std::uniform_int_distribution<int64_t> offset(-3, 3);
        return Fraction((a * Fraction(d)).floor() + offset(rng), d);
    };
    for (int64_t i = 0; i < opts.minden_random_intervals; ++i) {
        Fraction a = random_point();
        Fraction b = i % 2 == 0 ? random_point() : near_point(a);
        if (b < a) std::swap(a, b);
        for (Variant v : minden::kAllVariants) {
            if (a == b && v != Variant::Closed) continue;
            const Interval in(a, b, v);
            const int64_t fast = minden::min_denominator(in, Algorithm::Fast);
            const int64_t slow = minden::min_denominator(in, Algorithm::Oracle);
            res.expect(fast == slow, [&] {
                return "q(" + in.str() + "): fast " + to_string(fast) + " vs oracle " +
                       to_string(slow);
            });
            // Nested sub-interval: shrink toward an interior point.
            if (a < b) {
                const Fraction mid = (a + b) * Fraction(1, 2);
                const Interval inner(mid, b, false, false);
                res.expect(in.includes(inner) && minden::min_denominator(inner) >= fast, [&] {
                    return "monotonicity fails for " + inner.str() + " in " + in.str();
                });
            }
        }
    }
    for (int64_t n = 1; n <= opts.minden_reflection_max_n; ++n) {
        for (int64_t j = 1; j <= n; ++j) {
            res.expect(minden::q_j(n, j, Variant::HalfOpenLeft) ==
                           minden::q_j(n, n - j + 1, Variant::HalfOpenRight),
                       [&] { return "reflection fails at N=" + to_string(n) + ", j=" + to_string(j); });
        }
    }
    for (int64_t n = 1; n <= opts.minden_ordering_max_n; ++n) {
        for (int64_t j = 1; j <= n; ++j) {
            const int64_t open = minden::q_j(n, j, Variant::Open);
            const int64_t half = minden::q_j(n, j, Variant::HalfOpenRight);
            const int64_t closed = minden::q_j(n, j, Variant::Closed);
            res.expect(open >= half && half >= closed,
                       [&] { return "variant ordering fails at N=" + to_string(n) + ", j=" + to_string(j); });
        }
    }
    for (int64_t n = 1; n <= opts.minden_anchor_max_n; ++n) {
        res.expect(minden::q_j(n, 1) == n && minden::q_j(n, n) == 1,
                   [&] { return "q_1(N) = N or q_N(N) = 1 fails at N=" + to_string(n); });
    }
    return res;
}

SuiteResult verify_identities(const Options& opts) {
    SuiteResult res;
    res.name = "identities";
    for (int64_t n = 1; n <= opts.identities_max_n; ++n) {
        const auto id = sums::check_identities(n);
        const std::string at = " at N=" + to_string(n);
        res.expect(id.R_is_minus_two_T(), [&] {
            return "R = -2T fails" + at + ": R=" + to_string(id.R_definition) +
                   ", T=" + to_string(id.parts.T);
        });
        res.expect(id.R_routes_agree(), [&] { return "R definition != distribution sum" + at; });
        res.expect(id.T_split(), [&] { return "T != T1 + T2" + at; });
        res.expect(id.T1_split(), [&] { return "T1 != T11 + T12" + at; });
        res.expect(id.theta_mismatch_k < 0, [&] {
            return "theta direct != gap formula" + at + ", k=" + to_string(id.theta_mismatch_k);
        });
        res.expect(id.xi_sigma_mismatch_k < 0, [&] {
            return "xi != -2 sigma" + at + ", k=" + to_string(id.xi_sigma_mismatch_k);
        });
        res.expect(id.S_direct == id.S_theta, [&] { return "S != sum theta" + at; });
        res.expect(id.T_from_xi == id.parts.T, [&] { return "T != -1/2 sum xi" + at; });
        res.expect(sums::T11_grouped(n) == id.parts.T11, [&] { return "T11 regrouping differs" + at; });
        res.expect(sums::T12_grouped(n) == id.parts.T12, [&] { return "T12 regrouping differs" + at; });
        const auto probe = sums::T11_upper_half_sum(n);
        res.expect(probe.terms == 0 && probe.value == 0,
                   [&] { return "second T11 double sum is not empty" + at; });
        const auto grouped = sums::T2_grouped(n);
        res.expect(grouped.total == id.parts.T2, [&] { return "grouped T2 differs" + at; });
        res.expect(n < 1 || grouped.by_j[2] == 0, [&] { return "j=2 group of T2 nonzero" + at; });
    }
    return res;
}

SuiteResult verify_variants(const Options& opts) {
    using minden::Variant;
    SuiteResult res;
    res.name = "variants";
    for (int64_t n = 1; n <= opts.variants_max_n; ++n) {
        const int64_t s = sums::S_variant(n, Variant::HalfOpenRight);
        const int64_t s_star = sums::S_variant(n, Variant::HalfOpenLeft);
        const int64_t s_bar = sums::S_variant(n, Variant::Closed);
        const int64_t s_tilde = sums::S_variant(n, Variant::Open);
        const int64_t n_tau = n * arith::divisor_count(n);
        const std::string at = " at N=" + to_string(n);
        res.expect(s_star == s, [&] { return "S* != S" + at; });
        res.expect(s_bar <= s_star && s <= s_tilde, [&] { return "S̄ <= S* = S <= S~ fails" + at; });
        res.expect(s_tilde - s == sums::variant_gap_divisor_sum(n), [&] {
            return "S~ - S = " + to_string(s_tilde - s) + " != divisor sum" + at;
        });
        res.expect(s_tilde - s <= n_tau, [&] { return "S~ - S > N tau(N)" + at; });
        res.expect(s - s_bar <= n_tau, [&] { return "S - S̄ > N tau(N)" + at; });
    }
    return res;
}

SuiteResult verify_expsums(const Options& opts) {
    using namespace expsums;
    SuiteResult res;
    res.name = "expsums";
    for (int64_t q = 1; q <= opts.weil_max_q; ++q) {
        for (int64_t a = 0; a < q; ++a) {
            for (int64_t b = 0; b < q; ++b) {
                const Complex k = kloosterman_complex(a, b, q);
                res.expect(std::abs(k.imag()) < kTransformTolerance, [&] {
                    return "Im K(" + to_string(a) + "," + to_string(b) + ";" + to_string(q) +
                           ") not negligible";
                });
                res.expect(std::abs(k) <= weil_bound(a, b, q) + kInequalitySlack, [&] {
                    return "Weil bound fails for K(" + to_string(a) + "," + to_string(b) + ";" +
                           to_string(q) + ")";
                });
            }
            res.expect(std::abs(ramanujan(a, q) - ramanujan(-a, q)) < kTransformTolerance,
                       [&] { return "c_q not even at q=" + to_string(q); });
        }
    }
    for (int64_t q = 1; q <= opts.transform_max_q; ++q) {
        const auto transform = dft(b1_table(q));
        double worst = 0.0;
        double mass = 0.0;
        for (int64_t x = 0; x < q; ++x) {
            worst = std::max(worst, std::abs(transform(x) - b1_hat_closed(x, q)));
            if (x > 0) mass += std::abs(transform(x));
        }
        res.expect(worst < kTransformTolerance,
                   [&] { return "closed-form B1 transform off by " + std::to_string(worst) + " at q=" + to_string(q); });
        if (q >= 2) {
            const double qd = static_cast<double>(q);
            res.expect(mass <= qd * std::log(qd) / 2 + kInequalitySlack,
                       [&] { return "sum |B1^| > q ln q / 2 at q=" + to_string(q); });
        }
        for (int64_t n = 1; n <= std::min<int64_t>(q, 5); ++n) {
            res.expect(twisted_b1_sum(1, q, q, n) == 0,
                       [&] { return "full-period twisted B1 sum nonzero at q=" + to_string(q); });
        }
    }
    for (int64_t q = 2; q <= opts.cosecant_max_q; ++q) {
        const double qd = static_cast<double>(q);
        res.expect(cosecant_sum(q) <= qd * std::log(qd) + kInequalitySlack,
                   [&] { return "cosecant sum exceeds q ln q at q=" + to_string(q); });
    }
    for (int64_t q = 1; q <= opts.twisted_max_q; ++q) {
        const double bound = twisted_b1_bound(q);
        for (int64_t n = 1; n <= q; ++n) {
            // Prefix sums of the exact terms, scaled by 2q.
            std::vector<int64_t> prefix(static_cast<std::size_t>(q) + 1, 0);
            for (int64_t m = 1; m <= q; ++m) {
                const int64_t term =
                    std::gcd(m, q) == 1 ? b1_scaled(n * farey::inv_mod(m, q), q) : 0;
                prefix[m] = prefix[m - 1] + term;
            }
            for (int64_t lo = 1; lo <= q; ++lo) {
                for (int64_t hi = lo; hi <= q; ++hi) {
                    const Exact value = exact_ratio(prefix[hi] - prefix[lo - 1], 2 * q);
                    res.expect(within_bound(value, bound), [&] {
                        return "twisted B1 bound fails: q=" + to_string(q) + ", N=" + to_string(n) +
                               ", I=[" + to_string(lo) + "," + to_string(hi) + "]";
                    });
                }
            }
        }
        // Spot-check the prefix-sum shortcut against the direct sum.
        res.expect(twisted_b1_sum(1, (q + 1) / 2, q, 1) ==
                       [&] {
                           Exact acc = 0;
                           for (int64_t m = 1; m <= (q + 1) / 2; ++m) {
                               if (std::gcd(m, q) == 1) acc += b1_ratio(farey::inv_mod(m, q), q);
                           }
                           return acc;
                       }(),
                   [&] { return "twisted_b1_sum mismatch at q=" + to_string(q); });
    }
    // Weighted sums on the half-integer grid a = u/2, b = a + w/2, 0 < b - a <= s.
    for (int64_t s = 1; s <= opts.weighted_max_s; ++s) {
        for (int64_t n = 1; n <= opts.weighted_max_s; ++n) {
            for (int64_t u = -2; u <= 2 * s; ++u) {
                const Fraction a(u, 2);
                for (int64_t w = 1; w <= 2 * s; ++w) {
                    const Fraction b = a + Fraction(w, 2);
                    const Exact value = weighted_b1_sum(s, a, b, n);
                    res.expect(within_bound(value, weighted_b1_bound(s, a, b)), [&] {
                        return "weighted B1 bound fails: s=" + to_string(s) + ", N=" + to_string(n) +
                               ", a=" + a.str() + ", b=" + b.str();
                    });
                }
            }
        }
    }
    // Odd test functions against the inverse-twisted bound, and parity of the DFT.
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int64_t q = 2; q <= 24; ++q) {
        std::vector<Complex> odd(static_cast<std::size_t>(q));
        std::vector<Complex> even(static_cast<std::size_t>(q));
        for (int64_t n = 0; n < q; ++n) {
            const int64_t m = arith::mod(-n, q);
            if (m < n) continue;
            const Complex z{unit(rng), unit(rng)};
            const Complex w{unit(rng), unit(rng)};
            odd[n] = m == n ? Complex(0.0) : z;
            odd[m] = -odd[n];
            even[n] = w;
            even[m] = w;
        }
        odd[0] = 0.0;
        const PeriodicFunction f(odd);
        const PeriodicFunction g(even);
        res.expect(dft(f).is_odd() && dft(g).is_even(),
                   [&] { return "DFT parity not preserved at q=" + to_string(q); });
        const double bound = inverse_twisted_bound(f);
        for (int64_t n = 1; n <= q; ++n) {
            for (int64_t lo = 1; lo <= q; ++lo) {
                for (int64_t hi = lo; hi <= q; ++hi) {
                    res.expect(std::abs(inverse_twisted_sum(f, lo, hi, n)) <= bound + 1e-9, [&] {
                        return "inverse-twisted bound fails: q=" + to_string(q) + ", N=" +
                               to_string(n) + ", I=[" + to_string(lo) + "," + to_string(hi) + "]";
                    });
                }
            }
        }
    }
    for (int64_t d = 2; d <= 40; ++d) {
        for (int64_t p = 1; p < d; ++p) {
            if (std::gcd(p, d) != 1) continue;
            for (int64_t lo = -5; lo <= 5; ++lo) {
                for (int64_t len = 0; len <= 3 * d; len += 1 + len / 4) {
                    res.expect(geometric_sum_bound_check(lo, lo + len, Fraction(p, d)), [&] {
                        return "geometric sum bound fails for alpha=" + to_string(p) + "/" + to_string(d);
                    });
                }
            }
        }
    }
    return res;
}

std::vector<SuiteResult> run(std::string_view suite, const Options& opts) {
    std::vector<SuiteResult> out;
    const bool all = suite == "all";
    bool matched = all;
    if (all || suite == "farey") out.push_back(verify_farey(opts)), matched = true;
    if (all || suite == "minden") out.push_back(verify_minden(opts)), matched = true;
    if (all || suite == "identities") out.push_back(verify_identities(opts)), matched = true;
    if (all || suite == "expsums") out.push_back(verify_expsums(opts)), matched = true;
    if (all || suite == "variants") out.push_back(verify_variants(opts)), matched = true;
    if (!matched) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    return out;
}

}  // namespace fareysum::verify
