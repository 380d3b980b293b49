// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fareysum/arith.hpp"
#include "fareysum/expsums.hpp"
#include "fareysum/farey.hpp"
#include "fareysum/minden.hpp"
#include "fareysum/sums.hpp"

using namespace fareysum;
using std::int64_t;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::string at(int64_t n) { return "N=" + std::to_string(n); }

Outcome ac1() {
    Outcome o;
    for (int64_t n = 1; n <= 300 && o.pass; ++n) {
        const Exact r = sums::R_N(n, sums::RRoute::Definition);
        const auto parts = sums::T_parts(n);
        if (r != -2 * parts.T) o.fail("R != -2T at " + at(n));
    }
    if (o.pass) o.detail = "N = 1..300, exact";
    return o;
}

Outcome ac2() {
    Outcome o;
    for (int64_t n = 1; n <= 300 && o.pass; ++n) {
        const auto p = sums::T_parts(n);
        if (p.T != p.T1 + p.T2) o.fail("T != T1 + T2 at " + at(n));
        if (p.T1 != p.T11 + p.T12) o.fail("T1 != T11 + T12 at " + at(n));
    }
    if (o.pass) o.detail = "N = 1..300, exact";
    return o;
}

Outcome ac3() {
    Outcome o;
    for (int64_t n = 1; n <= 100 && o.pass; ++n) {
        for (int64_t k = 0; k <= n; ++k) {
            const int64_t direct = sums::theta_N(n, k, sums::ThetaRoute::DirectCount);
            const int64_t formula = sums::theta_N(n, k, sums::ThetaRoute::GapFormula);
            if (direct != formula) {
                o.fail("theta mismatch at " + at(n) + ", k=" + std::to_string(k));
                break;
            }
        }
    }
    if (o.pass) o.detail = "N = 1..100, 0 <= k <= N";
    return o;
}

Outcome ac4() {
    using minden::Variant;
    Outcome o;
    for (int64_t n = 1; n <= 500 && o.pass; ++n) {
        const int64_t s = sums::S_variant(n, Variant::HalfOpenRight);
        const int64_t s_star = sums::S_variant(n, Variant::HalfOpenLeft);
        const int64_t s_bar = sums::S_variant(n, Variant::Closed);
        const int64_t s_tilde = sums::S_variant(n, Variant::Open);
        if (s_star != s) o.fail("S* != S at " + at(n));
        if (!(s_bar <= s && s <= s_tilde)) o.fail("ordering fails at " + at(n));
        if (s_tilde - s != sums::variant_gap_divisor_sum(n)) o.fail("divisor sum differs at " + at(n));
        if (s_tilde - s > n * arith::divisor_count(n)) o.fail("S~ - S > N tau(N) at " + at(n));
    }
    if (o.pass) o.detail = "N = 1..500";
    return o;
}

Outcome ac5() {
    using minden::Algorithm;
    Outcome o;
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<int64_t> den(1, 10000);
    auto point = [&] {
        const int64_t d = den(rng);
        std::uniform_int_distribution<int64_t> num(-2 * d, 2 * d);
        return Fraction(num(rng), d);
    };
    // Odd draws put b next to a so that the answers are large.
    auto near = [&](const Fraction& a) {
        const int64_t d = den(rng);
        std::uniform_int_distribution<int64_t> offset(-3, 3);
        return Fraction((a * Fraction(d)).floor() + offset(rng), d);
    };
    int64_t checked = 0;
    int64_t largest = 0;
    for (int i = 0; i < 10000 && o.pass; ++i) {
        Fraction a = point();
        Fraction b = i % 2 == 0 ? point() : near(a);
        if (b < a) std::swap(a, b);
        if (a == b) b = b + Fraction(1, den(rng));
        for (auto v : minden::kAllVariants) {
            const minden::Interval in(a, b, v);
            const int64_t fast = minden::min_denominator(in, Algorithm::Fast);
            const int64_t slow = minden::min_denominator(in, Algorithm::Oracle);
            ++checked;
            largest = std::max(largest, slow);
            if (fast != slow) {
                o.fail("q(" + in.str() + "): fast " + std::to_string(fast) + ", oracle " +
                       std::to_string(slow));
                break;
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(checked) + " interval/variant pairs, largest q " +
                   std::to_string(largest);
    }
    return o;
}

Outcome ac6() {
    using namespace expsums;
    Outcome o;
    double worst_imag = 0.0;
    for (int64_t q = 1; q <= 100 && o.pass; ++q) {
        for (int64_t a = 0; a < q; ++a) {
            for (int64_t b = 0; b < q; ++b) {
                const Complex k = kloosterman_complex(a, b, q);
                worst_imag = std::max(worst_imag, std::abs(k.imag()));
                if (std::abs(k.imag()) >= 1e-9) o.fail("Im K not negligible, q=" + std::to_string(q));
                if (std::abs(k.real()) > weil_bound(a, b, q) + kInequalitySlack) {
                    o.fail("Weil bound fails for K(" + std::to_string(a) + "," + std::to_string(b) +
                           ";" + std::to_string(q) + ")");
                }
            }
        }
    }
    if (o.pass) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "q <= 100, all a, b; max |Im K| = %.2e", worst_imag);
        o.detail = buf;
    }
    return o;
}

Outcome ac7() {
    using namespace expsums;
    Outcome o;
    double worst = 0.0;
    for (int64_t q = 1; q <= 200; ++q) {
        const auto t = dft(b1_table(q));
        for (int64_t x = 0; x < q; ++x) worst = std::max(worst, std::abs(t(x) - b1_hat_closed(x, q)));
    }
    if (worst >= 1e-9) o.fail("closed-form transform off by " + std::to_string(worst));

    int64_t twisted = 0;
    for (int64_t q = 1; q <= 60 && o.pass; ++q) {
        const double bound = twisted_b1_bound(q);
        for (int64_t n = 1; n <= q && o.pass; ++n) {
            std::vector<int64_t> prefix(static_cast<std::size_t>(q) + 1, 0);
            for (int64_t m = 1; m <= q; ++m) {
                prefix[m] = prefix[m - 1] +
                            (std::gcd(m, q) == 1 ? b1_scaled(n * farey::inv_mod(m, q), q) : 0);
            }
            for (int64_t lo = 1; lo <= q; ++lo) {
                for (int64_t hi = lo; hi <= q; ++hi) {
                    ++twisted;
                    if (!within_bound(exact_ratio(prefix[hi] - prefix[lo - 1], 2 * q), bound)) {
                        o.fail("twisted bound fails at q=" + std::to_string(q) + ", " + at(n) +
                               ", [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
                    }
                }
            }
        }
    }

    int64_t weighted = 0;
    for (int64_t s = 1; s <= 40 && o.pass; ++s) {
        for (int64_t n = 1; n <= 40; ++n) {
            for (int64_t u = -2; u <= 2 * s; ++u) {
                const Fraction a(u, 2);
                for (int64_t w = 1; w <= 2 * s; ++w) {
                    const Fraction b = a + Fraction(w, 2);
                    ++weighted;
                    if (!within_bound(weighted_b1_sum(s, a, b, n), weighted_b1_bound(s, a, b))) {
                        o.fail("weighted bound fails at s=" + std::to_string(s) + ", " + at(n) +
                               ", a=" + a.str() + ", b=" + b.str());
                    }
                }
            }
        }
    }
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "transform err %.2e; %lld twisted and %lld weighted cases", worst,
                      static_cast<long long>(twisted), static_cast<long long>(weighted));
        o.detail = buf;
    }
    return o;
}

Outcome ac8() {
    Outcome o;
    double first_err = 0.0;
    double last_err = 0.0;
    std::string trace;
    for (int k = 7; k <= 20; ++k) {
        const int64_t n = int64_t{1} << k;
        const auto row = cli::sweep_row(n);
        const double err = std::fabs(row.ratio - cli::kLimitConstant);
        if (k == 7) first_err = err;
        if (k == 20) last_err = err;
        char buf[48];
        std::snprintf(buf, sizeof buf, "%s2^%d:%.4f", trace.empty() ? "" : " ", k, row.ratio);
        trace += buf;
        if (n >= 1024 && !(row.ratio > 1.35 && row.ratio < 2.04)) {
            o.fail("ratio " + cli::format_float(row.ratio) + " outside (1.35, 2.04) at " + at(n));
        }
    }
    if (o.pass && !(last_err * 4.0 <= first_err)) {
        o.fail("error at 2^20 (" + cli::format_float(last_err) + ") not 4x below 2^7 (" +
               cli::format_float(first_err) + ")");
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "; |err| %.4g -> %.4g", first_err, last_err);
    o.detail = (o.pass ? trace : o.detail + " [" + trace + "]") + buf;
    return o;
}

Outcome ac9() {
    Outcome o;
    // Largest residual per decade [10^d, 10^(d+1)), N from 2 to 2000.
    std::vector<double> peak;
    int64_t emitted = 0;
    for (int64_t n = 2; n <= 2000; ++n) {
        const double res = cli::sweep_row(n).chen_haynes_residual;
        if (!std::isfinite(res)) {
            o.fail("residual not finite at " + at(n));
            continue;
        }
        ++emitted;
        const auto decade = static_cast<std::size_t>(std::floor(std::log10(static_cast<double>(n))));
        if (peak.size() <= decade) peak.resize(decade + 1, 0.0);
        peak[decade] = std::max(peak[decade], res);
    }
    std::string trace;
    for (std::size_t d = 0; d < peak.size(); ++d) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s1e%zu:%.3g", d ? " " : "", d, peak[d]);
        trace += buf;
        if (d > 0 && std::floor(std::log10(peak[d])) > std::floor(std::log10(peak[d - 1]))) {
            o.fail("order of magnitude rises in decade 1e" + std::to_string(d));
        }
    }
    o.detail = (o.pass ? "" : o.detail + "; ") + std::to_string(emitted) +
               " residuals, decade peaks " + trace;
    return o;
}

Outcome ac10() {
    Outcome o;
    for (int64_t n = 1; n <= 1000; ++n) {
        if (minden::q_j(n, 1) != n) o.fail("q_1 != N at " + at(n));
        if (minden::q_j(n, n) != 1) o.fail("q_N != 1 at " + at(n));
        if (n <= 300) {
            if (sums::theta_N(n, 0) != n) o.fail("theta_N(0) != N at " + at(n));
            if (sums::theta_N(n, n) != 0) o.fail("theta_N(N) != 0 at " + at(n));
        }
        if (!o.pass) break;
    }
    if (o.pass) o.detail = "q anchors N <= 1000, theta anchors N <= 300";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
        {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s (%.1fs) %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
