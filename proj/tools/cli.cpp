#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fareysum/sums.hpp"
#include "fareysum/verify.hpp"

namespace fareysum::cli {

namespace {

double ratio_of(std::int64_t s, std::int64_t n) {
    return static_cast<double>(s) / std::pow(static_cast<double>(n), 1.5);
}

// |R| / (N^{4/3} ln^2 N)
double r_over_bound(const Exact& r, std::int64_t n) {
    const double ln = std::log(static_cast<double>(n));
    return std::fabs(r.get_d()) / (std::pow(static_cast<double>(n), 4.0 / 3.0) * ln * ln);
}

struct ComputeArgs {
    std::int64_t n = 0;
    std::string variant = "half-open-right";
    bool s_only = false;
    std::int64_t budget = kDefaultExactBudget;
};

struct SweepArgs {
    std::int64_t from = 1;
    std::int64_t to = 1;
    std::int64_t step = 0;
    double factor = 0.0;
    std::string out;
    std::string variant = "half-open-right";
};

struct VerifyArgs {
    std::string suite = "all";
    std::int64_t max_n = 0;
};

int do_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
    const auto variant = minden::parse_variant(args.variant);
    if (!args.s_only && args.n > args.budget) {
        err << "N=" << args.n << " exceeds the exact budget " << args.budget
            << "; pass --s-only or raise --budget\n";
        return kExitBudget;
    }
    const std::int64_t s = sums::S_variant(args.n, variant);
    out << "N=" << args.n << '\n'
        << "variant=" << minden::variant_name(variant) << '\n'
        << "S_variant=" << s << '\n'
        << "ratio=" << format_float(ratio_of(s, args.n)) << '\n';
    if (args.s_only) return kExitOk;
    const auto rep = sums::sum_report(args.n);
    out << "S=" << rep.S << '\n'
        << "S_bar=" << rep.S_bar << '\n'
        << "S_star=" << rep.S_star << '\n'
        << "S_tilde=" << rep.S_tilde << '\n'
        << "integral=" << to_string(rep.integral) << '\n'
        << "R=" << to_string(rep.R) << '\n'
        << "T=" << to_string(rep.T) << '\n'
        << "T1=" << to_string(rep.T1) << '\n'
        << "T11=" << to_string(rep.T11) << '\n'
        << "T12=" << to_string(rep.T12) << '\n'
        << "T2=" << to_string(rep.T2) << '\n'
        << "R_over_bound=" << format_float(r_over_bound(rep.R, args.n)) << '\n';
    return kExitOk;
}

int do_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    const auto variant = minden::parse_variant(args.variant);
    if (args.from < 1 || args.to < args.from) {
        err << "sweep needs 1 <= --from <= --to\n";
        return kExitUsage;
    }
    if ((args.step > 0) == (args.factor > 0.0)) {
        err << "sweep needs exactly one of --step or --factor\n";
        return kExitUsage;
    }
    if (args.factor > 0.0 && args.factor <= 1.0) {
        err << "--factor must exceed 1\n";
        return kExitUsage;
    }
    std::ofstream file;
    std::ostream* sink = &out;
    if (!args.out.empty() && args.out != "-") {
        file.open(args.out, std::ios::out | std::ios::trunc);
        if (!file) {
            err << "cannot write " << args.out << '\n';
            return kExitOutput;
        }
        sink = &file;
    }
    std::vector<SweepRow> rows;
    for (std::int64_t n : sweep_grid(args.from, args.to, args.step, args.factor)) {
        rows.push_back(sweep_row(n, variant));
    }
    *sink << sweep_csv(rows);
    sink->flush();
    if (!*sink) {
        err << "write failed for " << args.out << '\n';
        return kExitOutput;
    }
    return kExitOk;
}

int do_verify(const VerifyArgs& args, std::ostream& out) {
    verify::Options opts;
    if (args.max_n > 0) opts.set_max_n(args.max_n);
    const auto results = verify::run(args.suite, opts);
    bool all_passed = true;
    for (const auto& r : results) {
        out << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks << " checks, "
            << r.failures << " failures)\n";
        if (!r.passed()) {
            out << "  first counterexample: " << r.first_counterexample << '\n';
            all_passed = false;
        }
    }
    return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

std::string format_float(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

SweepRow sweep_row(std::int64_t n, minden::Variant variant) {
    SweepRow row;
    row.N = n;
    row.S = sums::S_variant(n, variant);
    row.ratio = ratio_of(row.S, n);
    row.integral = sums::integral_q_fast(n);
    const double ln = std::log(static_cast<double>(n));
    row.chen_haynes_residual =
        n == 1 ? std::nan("")
               : std::fabs(row.integral - kLimitConstant * std::sqrt(static_cast<double>(n))) /
                     (ln * ln);
    return row;
}

std::vector<std::int64_t> sweep_grid(std::int64_t from, std::int64_t to, std::int64_t step,
                                     double factor) {
    std::vector<std::int64_t> grid;
    for (std::int64_t n = from; n <= to;) {
        grid.push_back(n);
        if (factor > 0.0) {
            n = std::max(n + 1, static_cast<std::int64_t>(std::llround(static_cast<double>(n) * factor)));
        } else {
            n += step;
        }
    }
    return grid;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "N,S,ratio,integral,chen_haynes_residual\n";
    for (const auto& r : rows) {
        os << r.N << ',' << r.S << ',' << format_float(r.ratio) << ',' << format_float(r.integral)
           << ',' << format_float(r.chen_haynes_residual) << '\n';
    }
    return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal denominators on uniform grids and the exact remainder identities"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* compute_cmd = app.add_subcommand("compute", "Exact report for one N");
    compute_cmd->add_option("--n", compute.n, "grid size N")->required()->check(CLI::PositiveNumber);
    compute_cmd->add_option("--variant", compute.variant, "cell boundary variant")
        ->check(CLI::IsMember({"half-open-right", "half-open-left", "closed", "open"}));
    compute_cmd->add_flag("--s-only", compute.s_only, "only the sum of minimal denominators");
    compute_cmd->add_option("--budget", compute.budget, "largest N for the exact fields")
        ->check(CLI::PositiveNumber);

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "CSV of S(N)/N^{3/2} over a grid of N");
    sweep_cmd->add_option("--from", sweep.from, "first N")->required();
    sweep_cmd->add_option("--to", sweep.to, "last N (inclusive bound)")->required();
    auto* step_opt = sweep_cmd->add_option("--step", sweep.step, "linear grid step")
                         ->check(CLI::PositiveNumber);
    auto* factor_opt = sweep_cmd->add_option("--factor", sweep.factor, "geometric grid factor");
    step_opt->excludes(factor_opt);
    sweep_cmd->add_option("--out", sweep.out, "output CSV path (stdout when omitted)");
    sweep_cmd->add_option("--variant", sweep.variant, "cell boundary variant")
        ->check(CLI::IsMember({"half-open-right", "half-open-left", "closed", "open"}));

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Run the exact and numerical check suites");
    verify_cmd->add_option("--suite", verify_args.suite, "suite to run")
        ->check(CLI::IsMember({"farey", "minden", "identities", "expsums", "variants", "all"}));
    verify_cmd->add_option("--max-n", verify_args.max_n, "override the N limit of the suites")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*compute_cmd) return do_compute(compute, out, err);
        if (*sweep_cmd) return do_sweep(sweep, out, err);
        return do_verify(verify_args, out);
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace fareysum::cli
