#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fareysum/minden.hpp"

namespace minden = fareysum::minden;
using fareysum::Fraction;
using minden::Algorithm;
using minden::Interval;
using minden::Variant;

namespace {

// Independent scan: every p/q with q ascending, membership by comparison.
std::int64_t scan_min_denominator(const Interval& in) {
    for (std::int64_t q = 1;; ++q) {
        for (std::int64_t p = in.lo().floor() * q - 1; Fraction(p, q) <= in.hi(); ++p) {
            if (in.contains(Fraction(p, q))) return q;
        }
    }
}

Interval make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, Variant v) {
    return Interval(Fraction(a, b), Fraction(c, d), v);
}

}  // namespace

TEST(Interval, RejectsEmptySets) {
    EXPECT_THROW(Interval(Fraction(1, 2), Fraction(1, 3), Variant::Closed), std::invalid_argument);
    EXPECT_THROW(Interval(Fraction(1, 2), Fraction(1, 2), Variant::Open), std::invalid_argument);
    EXPECT_THROW(Interval(Fraction(1, 2), Fraction(1, 2), Variant::HalfOpenRight),
                 std::invalid_argument);
    EXPECT_NO_THROW(Interval(Fraction(1, 2), Fraction(1, 2), Variant::Closed));
}

TEST(Interval, Membership) {
    const auto in = make(1, 3, 1, 2, Variant::HalfOpenRight);
    EXPECT_FALSE(in.contains(Fraction(1, 3)));
    EXPECT_TRUE(in.contains(Fraction(1, 2)));
    EXPECT_TRUE(in.contains(Fraction(2, 5)));
    EXPECT_TRUE(in.includes(make(2, 5, 1, 2, Variant::Open)));
    EXPECT_FALSE(in.includes(make(1, 3, 1, 2, Variant::Closed)));
}

TEST(MinDenominator, Examples) {
    for (Algorithm algo : {Algorithm::Oracle, Algorithm::Fast}) {
        EXPECT_EQ(minden::min_denominator(make(1, 2, 1, 1, Variant::HalfOpenRight), algo), 1);
        EXPECT_EQ(minden::min_denominator(make(0, 1, 1, 2, Variant::HalfOpenRight), algo), 2);
        EXPECT_EQ(minden::min_denominator(make(1, 3, 1, 2, Variant::Open), algo), 5);
    }
}

TEST(MinDenominator, PointIntervalGivesReducedDenominator) {
    const Interval point(Fraction(6, 14), Fraction(3, 7), Variant::Closed);
    EXPECT_EQ(minden::min_denominator(point, Algorithm::Fast), 7);
    EXPECT_EQ(minden::min_denominator(point, Algorithm::Oracle), 7);
    const Interval integer(Fraction(-3), Fraction(-3), Variant::Closed);
    EXPECT_EQ(minden::min_denominator(integer), 1);
}

TEST(MinDenominator, NegativeAndWideIntervals) {
    EXPECT_EQ(minden::min_denominator(make(-7, 3, -9, 4, Variant::Open)), 7);  // -16/7
    EXPECT_EQ(scan_min_denominator(make(-7, 3, -9, 4, Variant::Open)), 7);
    EXPECT_EQ(minden::min_denominator(make(-5, 2, 7, 3, Variant::Open)), 1);
}

TEST(MinDenominator, LargeDenominatorsStayExact) {
    const std::int64_t big = 1'000'000'000;
    EXPECT_EQ(minden::q_t_delta(Fraction(1, big), Fraction(1, big)), big);
    EXPECT_EQ(minden::q_j(big, 1), big);
    EXPECT_EQ(minden::q_j(big, big), 1);
    EXPECT_EQ(minden::q_j(big, big, Variant::Open), big + 1);
    const Interval point(Fraction(999'999'937, 1'999'999'973), Fraction(999'999'937, 1'999'999'973),
                         Variant::Closed);
    EXPECT_EQ(minden::min_denominator(point), 1'999'999'973);
}

TEST(MinDenominator, FastAgreesWithOracleOnRandomIntervals) {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::int64_t> den(1, 10000);
    for (int i = 0; i < 3000; ++i) {
        const std::int64_t b = den(rng), d = den(rng);
        std::uniform_int_distribution<std::int64_t> nb(-b, 2 * b), nd(-d, 2 * d);
        Fraction x(nb(rng), b), y(nd(rng), d);
        if (y < x) std::swap(x, y);
        for (Variant v : minden::kAllVariants) {
            if (x == y && v != Variant::Closed) continue;
            const Interval in(x, y, v);
            const auto fast = minden::min_denominator(in, Algorithm::Fast);
            ASSERT_EQ(fast, minden::min_denominator(in, Algorithm::Oracle)) << in.str();
            ASSERT_TRUE(in.contains(minden::simplest_fraction(in))) << in.str();
            ASSERT_EQ(minden::simplest_fraction(in).den(), fast);
        }
    }
}

TEST(MinDenominator, AgreesWithIndependentScanOnTightIntervals) {
    // Narrow windows around fractions with small denominators exercise the
    // endpoint flags.
    for (std::int64_t q = 1; q <= 30; ++q) {
        for (std::int64_t p = 0; p <= q; ++p) {
            for (std::int64_t w = 1; w <= 4; ++w) {
                const Fraction c(p, q);
                const Fraction eps(1, 97 * w);
                for (Variant v : minden::kAllVariants) {
                    for (const Interval in : {Interval(c - eps, c, v), Interval(c, c + eps, v),
                                              Interval(c - eps, c + eps, v)}) {
                        ASSERT_EQ(minden::min_denominator(in), scan_min_denominator(in)) << in.str();
                    }
                }
            }
        }
    }
}

TEST(MinDenominator, MonotoneUnderInclusion) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> num(0, 5000);
    for (int i = 0; i < 2000; ++i) {
        std::vector<std::int64_t> cuts{num(rng), num(rng), num(rng), num(rng)};
        std::sort(cuts.begin(), cuts.end());
        if (cuts[0] == cuts[3] || cuts[1] == cuts[2]) continue;
        const Interval outer(Fraction(cuts[0], 5000), Fraction(cuts[3], 5000), Variant::Closed);
        const Interval inner(Fraction(cuts[1], 5000), Fraction(cuts[2], 5000), Variant::Open);
        ASSERT_TRUE(outer.includes(inner));
        ASSERT_GE(minden::min_denominator(inner), minden::min_denominator(outer));
    }
}

TEST(QTDelta, Examples) {
    EXPECT_EQ(minden::q_t_delta(Fraction(1), Fraction(1)), 1);
    EXPECT_EQ(minden::q_t_delta(Fraction(1, 2), Fraction(1, 2)), 2);
    EXPECT_EQ(minden::q_t_delta(Fraction(1, 7), Fraction(1, 7)), 7);
    EXPECT_THROW(minden::q_t_delta(Fraction(1), Fraction(0)), std::domain_error);
    EXPECT_THROW(minden::q_t_delta(Fraction(1), Fraction(-1, 2)), std::domain_error);
}

TEST(QJ, Examples) {
    EXPECT_EQ(minden::q_j(9, 1), 9);
    EXPECT_EQ(minden::q_j(9, 9), 1);
    EXPECT_EQ(minden::q_j(4, 3), 3);
    EXPECT_THROW(minden::q_j(4, 0), std::domain_error);
    EXPECT_THROW(minden::q_j(4, 5), std::domain_error);
}

TEST(QJ, FastMatchesOracleForAllVariants) {
    for (std::int64_t n = 1; n <= 80; ++n) {
        for (std::int64_t j = 1; j <= n; ++j) {
            for (Variant v : minden::kAllVariants) {
                ASSERT_EQ(minden::q_j(n, j, v, Algorithm::Fast), minden::q_j(n, j, v, Algorithm::Oracle))
                    << "N=" << n << " j=" << j << " " << minden::variant_name(v);
            }
        }
    }
}

TEST(QJ, ReflectionMapsHalfOpenLeftToHalfOpenRight) {
    for (std::int64_t n = 1; n <= 200; ++n) {
        for (std::int64_t j = 1; j <= n; ++j) {
            ASSERT_EQ(minden::q_j(n, j, Variant::HalfOpenLeft), minden::q_j(n, n - j + 1));
        }
    }
}

TEST(QJ, VariantOrdering) {
    for (std::int64_t n = 1; n <= 500; ++n) {
        for (std::int64_t j = 1; j <= n; ++j) {
            const auto open = minden::q_j(n, j, Variant::Open);
            const auto half = minden::q_j(n, j, Variant::HalfOpenRight);
            const auto closed = minden::q_j(n, j, Variant::Closed);
            ASSERT_GE(open, half);
            ASSERT_GE(half, closed);
        }
    }
}

TEST(Variant, NamesRoundTrip) {
    for (Variant v : minden::kAllVariants) EXPECT_EQ(minden::parse_variant(minden::variant_name(v)), v);
    EXPECT_THROW(minden::parse_variant("sideways"), std::invalid_argument);
}
