#pragma once

// Command-line front end: compute, sweep and verify.
//
// Exit codes: 0 success, 1 failed verification, 2 invalid flags, 3 N over
// the exact budget without --s-only, 4 unwritable output path.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fareysum/minden.hpp"

namespace fareysum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitOutput = 4;

inline constexpr std::int64_t kDefaultExactBudget = 2000;

/// 16/pi^2.
inline constexpr double kLimitConstant = 1.6211389382774045;

struct SweepRow {
    std::int64_t N = 0;
    std::int64_t S = 0;
    double ratio = 0.0;                 // S / N^{3/2}
    double integral = 0.0;              // integral_0^1 q(t, 1/N) dt
    double chen_haynes_residual = 0.0;  // |integral - (16/pi^2) sqrt N| / ln^2 N; NaN at N = 1
};

SweepRow sweep_row(std::int64_t n, minden::Variant variant = minden::Variant::HalfOpenRight);

/// Linear grid when factor <= 0 (from, from + step, ...), geometric
/// otherwise (each term at least one above the previous). All terms <= to.
std::vector<std::int64_t> sweep_grid(std::int64_t from, std::int64_t to, std::int64_t step,
                                     double factor);

/// CSV text for the rows: header N,S,ratio,integral,chen_haynes_residual.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Floats with 12 significant digits.
std::string format_float(double x);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fareysum::cli
