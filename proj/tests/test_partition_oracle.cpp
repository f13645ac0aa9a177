#include <set>

#include <gtest/gtest.h>

#include "qlab/builders.hpp"
#include "qlab/partition_oracle.hpp"

using namespace qlab;

TEST(EnumerateCubic, EmptyPartition)
{
    const auto c = enumerate_cubic(0);
    EXPECT_EQ(c.even_parts_count, 1u);
    EXPECT_EQ(c.odd_parts_count, 0u);
    EXPECT_EQ(c.a_value, 1);
}

TEST(EnumerateCubic, One)
{
    const auto c = enumerate_cubic(1);
    EXPECT_EQ(c.even_parts_count, 0u);
    EXPECT_EQ(c.odd_parts_count, 1u);
    EXPECT_EQ(c.a_value, -1);
}

// 2 = 1+1 | 2 (first color) | 2 (second color)
TEST(EnumerateCubic, Two)
{
    const auto c = enumerate_cubic(2);
    EXPECT_EQ(c.even_parts_count, 1u);
    EXPECT_EQ(c.odd_parts_count, 2u);
    EXPECT_EQ(c.a_value, -1);
}

TEST(EnumerateCubic, Eight)
{
    EXPECT_EQ(enumerate_cubic(8).a_value, 2);
}

TEST(EnumerateCubic, CapIsEnforced)
{
    EXPECT_THROW(enumerate_cubic(41), EnumerationCapExceeded);
    EXPECT_NO_THROW(enumerate_cubic(12, 12));
    EXPECT_THROW(enumerate_cubic(13, 12), EnumerationCapExceeded);
    EXPECT_THROW(enumerate_cubic(-1), std::invalid_argument);
    try {
        enumerate_cubic(50);
    } catch (const EnumerationCapExceeded &e) {
        EXPECT_NE(std::string(e.what()).find("dynamic-programming"), std::string::npos);
    }
}

TEST(EnumerateCubic, PartitionsAreCanonicalAndDistinct)
{
    for (long n = 0; n <= 14; ++n) {
        std::set<std::vector<std::pair<long, int>>> seen;
        for_each_cubic_partition(n, [&](const std::vector<ColoredPart> &parts) {
            long sum = 0;
            std::vector<std::pair<long, int>> key;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                const auto &p = parts[i];
                sum += p.value;
                EXPECT_GE(p.value, 1);
                if (p.value % 2 == 1) {
                    EXPECT_EQ(p.color, PartColor::First);
                }
                if (i > 0) {
                    const auto &prev = parts[i - 1];
                    const bool ordered = prev.value > p.value
                                         || (prev.value == p.value && static_cast<int>(prev.color) <= static_cast<int>(p.color));
                    EXPECT_TRUE(ordered);
                }
                key.emplace_back(p.value, static_cast<int>(p.color));
            }
            EXPECT_EQ(sum, n);
            EXPECT_TRUE(seen.insert(key).second) << "duplicate partition of " << n;
        });
    }
}

TEST(SignedCountDp, FirstValues)
{
    const auto a = signed_count_dp(9);
    const std::vector<long> expected{1, -1, -1, 0, 1, 0, -1, 1, 2};
    ASSERT_EQ(a.size(), expected.size());
    for (std::size_t n = 0; n < expected.size(); ++n) {
        EXPECT_EQ(a[n], expected[n]) << "n=" << n;
        EXPECT_EQ(a[n], enumerate_cubic(static_cast<long>(n)).a_value);
    }
    EXPECT_EQ(a[5], 0);
    EXPECT_THROW(signed_count_dp(0), std::invalid_argument);
}

TEST(SignedCountDp, A26IsDivisibleByThree)
{
    const auto a = signed_count_dp(27);
    EXPECT_EQ(mpz_fdiv_ui(a[26].get_mpz_t(), 3), 0u);
}

TEST(OracleAgreement, ThreeWayUpTo40)
{
    const auto dp = signed_count_dp(41);
    const auto totals = cubic_count_dp(41);
    const auto series = a_series(IntegerRing{}, 41);
    const auto cubic = evaluate("1/(f1*f2)", IntegerRing{}, 41);
    for (long n = 0; n <= 40; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const auto c = enumerate_cubic(n);
        EXPECT_EQ(dp[i], c.a_value) << "n=" << n;
        EXPECT_EQ(series[i], c.a_value) << "n=" << n;
        EXPECT_EQ(cubic[i], static_cast<unsigned long>(c.even_parts_count + c.odd_parts_count)) << "n=" << n;
        EXPECT_EQ(totals[i], cubic[i]) << "n=" << n;
    }
}

TEST(OracleAgreement, DpMatchesSeriesBelow2000)
{
    const auto dp = signed_count_dp(2000);
    const auto series = a_series(IntegerRing{}, 2000);
    for (std::size_t n = 0; n < 2000; ++n) {
        ASSERT_EQ(dp[n], series[n]) << "n=" << n;
    }
}
