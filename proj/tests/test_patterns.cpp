#include "aesec/patterns.hpp"

#include "aesec/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace aesec {
namespace {

using Subset = std::vector<std::size_t>;

std::vector<Subset> all_subsets(std::size_t n)
{
    std::vector<Subset> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    {
        Subset s;
        for (std::size_t p = 0; p < n; ++p)
            if (mask >> p & 1) s.push_back(p);
        out.push_back(s);
    }
    return out;
}

std::size_t rank_sum(Subset const& s)
{
    std::size_t w = 0;
    for (auto p : s) w += p + 1;
    return w;
}

template <typename Stream>
std::vector<NoisePattern> drain(std::size_t n, std::size_t limit = SIZE_MAX)
{
    Stream stream(n);
    std::vector<NoisePattern> out;
    NoisePattern p;
    while (out.size() < limit && stream.next(p))
        out.push_back(p);
    return out;
}

TEST(HammingStream, ThreeBits)
{
    auto got = drain<HammingPatternStream>(3);
    std::vector<Subset> expected{{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i)
    {
        EXPECT_EQ(got[i].positions, expected[i]) << i;
        EXPECT_EQ(got[i].weight, expected[i].size());
    }
}

TEST(HammingStream, TwelveBitsAreAllDistinct)
{
    auto got = drain<HammingPatternStream>(12);
    std::set<Subset> seen;
    for (auto const& p : got)
        seen.insert(p.positions);
    EXPECT_EQ(got.size(), 4096u);
    EXPECT_EQ(seen.size(), 4096u);
}

TEST(HammingStream, MatchesBruteForceOrder)
{
    for (std::size_t n = 1; n <= 10; ++n)
    {
        auto expected = all_subsets(n);
        std::stable_sort(expected.begin(), expected.end(),
                         [](Subset const& a, Subset const& b) { return a.size() < b.size(); });
        auto got = drain<HammingPatternStream>(n);
        ASSERT_EQ(got.size(), expected.size()) << "n = " << n;
        for (std::size_t i = 0; i < got.size(); ++i)
            ASSERT_EQ(got[i].positions, expected[i]) << "n = " << n << ", i = " << i;
    }
}

TEST(HammingStream, WeightNeverDecreasesAtFullLength)
{
    HammingPatternStream stream(128);
    NoisePattern p;
    std::size_t last = 0;
    for (int i = 0; i < 300'000; ++i)
    {
        ASSERT_TRUE(stream.next(p));
        ASSERT_GE(p.weight, last);
        ASSERT_TRUE(std::is_sorted(p.positions.begin(), p.positions.end()));
        last = p.weight;
    }
    EXPECT_EQ(last, 3u);  // 1 + 128 + 8128 < 3e5 < 1 + 128 + 8128 + 341376
}

TEST(LogisticStream, FourRanks)
{
    // 1-based ranks
    std::vector<Subset> expected{{},     {1},    {2},    {3},    {1, 2},    {4},
                                 {1, 3}, {1, 4}, {2, 3}, {2, 4}, {1, 2, 3}, {3, 4},
                                 {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 3, 4}};
    auto got = drain<LogisticPatternStream>(4);
    ASSERT_EQ(got.size(), 16u);
    for (std::size_t i = 0; i < got.size(); ++i)
    {
        Subset ranks;
        for (auto p : got[i].positions) ranks.push_back(p + 1);
        EXPECT_EQ(ranks, expected[i]) << i;
        EXPECT_EQ(got[i].weight, rank_sum(got[i].positions));
    }
}

TEST(LogisticStream, MatchesBruteForceOrder)
{
    auto less = [](Subset const& a, Subset const& b) {
        if (rank_sum(a) != rank_sum(b)) return rank_sum(a) < rank_sum(b);
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    };
    for (std::size_t n = 1; n <= 10; ++n)
    {
        auto expected = all_subsets(n);
        std::sort(expected.begin(), expected.end(), less);
        auto got = drain<LogisticPatternStream>(n);
        ASSERT_EQ(got.size(), std::size_t{1} << n) << "n = " << n;
        for (std::size_t i = 0; i < got.size(); ++i)
            ASSERT_EQ(got[i].positions, expected[i]) << "n = " << n << ", i = " << i;
    }
}

// Patterns of logistic weight w are the partitions of w into distinct parts
// no larger than n.
TEST(LogisticStream, CountsMatchDistinctPartitions)
{
    constexpr std::size_t kMaxWeight = 20;
    for (std::size_t n = 1; n <= 16; ++n)
    {
        // q[w] = partitions of w into distinct parts <= n
        std::vector<std::uint64_t> q(kMaxWeight + 1, 0);
        q[0] = 1;
        for (std::size_t part = 1; part <= n; ++part)
            for (std::size_t w = kMaxWeight; w >= part; --w)
                q[w] += q[w - part];

        std::vector<std::uint64_t> seen(kMaxWeight + 1, 0);
        LogisticPatternStream stream(n);
        NoisePattern p;
        while (stream.next(p) && p.weight <= kMaxWeight)
            ++seen[p.weight];
        EXPECT_EQ(seen, q) << "n = " << n;
    }
}

TEST(LogisticStream, WeightNeverDecreasesAtFullLength)
{
    LogisticPatternStream stream(128);
    NoisePattern p;
    std::size_t last = 0;
    std::set<Subset> seen;
    for (int i = 0; i < 200'000; ++i)
    {
        ASSERT_TRUE(stream.next(p));
        ASSERT_GE(p.weight, last);
        ASSERT_TRUE(std::is_sorted(p.positions.begin(), p.positions.end()));
        ASSERT_TRUE(p.positions.empty() || p.positions.back() < 128);
        ASSERT_TRUE(seen.insert(p.positions).second);
        last = p.weight;
    }
}

TEST(PatternStreams, ZeroLengthIsRejected)
{
    EXPECT_THROW(HammingPatternStream(0), UsageError);
    EXPECT_THROW(LogisticPatternStream(0), UsageError);
}

TEST(PatternStreams, StayExhausted)
{
    HammingPatternStream h(2);
    LogisticPatternStream l(2);
    NoisePattern p;
    for (int i = 0; i < 4; ++i)
    {
        EXPECT_TRUE(h.next(p));
        EXPECT_TRUE(l.next(p));
    }
    for (int i = 0; i < 3; ++i)
    {
        EXPECT_FALSE(h.next(p));
        EXPECT_FALSE(l.next(p));
    }
}

}  // namespace
}  // namespace aesec
