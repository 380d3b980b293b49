#pragma once

// Executable check suites over the farey, minden, sums and expsums modules.
// Each suite counts individual checks and keeps the first counterexample.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fareysum::verify {

struct SuiteResult {
    std::string name;
    std::int64_t checks = 0;
    std::int64_t failures = 0;
    std::string first_counterexample;

    bool passed() const { return failures == 0; }
    /// Records one check; keeps the description of the first failure.
    void expect(bool ok, const std::function<std::string()>& describe);
};

struct Options {
    std::int64_t farey_max_k = 200;
    std::int64_t minden_random_intervals = 10000;
    std::int64_t minden_max_endpoint_den = 10000;
    std::int64_t minden_reflection_max_n = 200;
    std::int64_t minden_ordering_max_n = 500;
    std::int64_t minden_anchor_max_n = 1000;
    std::uint64_t seed = 987654321;
    std::int64_t identities_max_n = 300;
    std::int64_t variants_max_n = 500;
    std::int64_t weil_max_q = 100;
    std::int64_t transform_max_q = 200;
    std::int64_t twisted_max_q = 60;
    std::int64_t weighted_max_s = 40;
    std::int64_t cosecant_max_q = 500;

    /// Applies a single --max-n style limit to every N-indexed suite.
    void set_max_n(std::int64_t max_n);
};

SuiteResult verify_farey(const Options& opts);
SuiteResult verify_minden(const Options& opts);
SuiteResult verify_identities(const Options& opts);
SuiteResult verify_expsums(const Options& opts);
SuiteResult verify_variants(const Options& opts);

inline constexpr std::string_view kSuiteNames[] = {"farey", "minden", "identities", "expsums",
                                                   "variants"};

/// Runs one named suite, or all of them for "all". Throws
/// std::invalid_argument on an unknown name.
std::vector<SuiteResult> run(std::string_view suite, const Options& opts);

}  // namespace fareysum::verify
