#include <gtest/gtest.h>

#include <set>

#include "mulli/enumeration.hpp"
#include "mulli/error.hpp"
#include "oracles.hpp"

using namespace mulli;

namespace {

std::vector<Partition> ps(std::initializer_list<std::initializer_list<int>> xs) {
    std::vector<Partition> out;
    for (auto x : xs) out.emplace_back(x);
    return out;
}

// Distinct odd parts, none divisible by p, n = 0..30; frozen from
// oracle::distinct_odd_count.
const std::vector<std::int64_t> kDistinctOddP3{1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 2, 2, 1, 0,
                                               1, 2, 3, 3, 2, 1, 1, 3, 5, 5, 3, 1, 2, 5, 7};
const std::vector<std::int64_t> kDistinctOddP5{1, 1, 0, 1, 1, 0, 0, 1, 1, 1, 2, 2, 2, 2, 2, 1,
                                               2, 3, 2, 3, 5, 5, 4, 5, 6, 4, 4, 7, 7, 7, 10};
const std::vector<std::int64_t> kDistinctOddP7{1, 1, 0, 1, 1, 1, 1, 0, 1, 2, 1, 1, 2, 2, 3, 3,
                                               3, 4, 4, 4, 5, 4, 4, 6, 6, 7, 7, 8, 11, 11, 10};

}  // namespace

TEST(ForEachPartition, Counts) {
    EXPECT_EQ(partitions_of(18).size(), 385u);
    EXPECT_EQ(partitions_of(0).size(), 1u);
    EXPECT_TRUE(partitions_of(0).front().empty());
    EXPECT_EQ(oracle::partition_count(10), 42);
    EXPECT_EQ(partitions_of(10).size(), 42u);
    for (int n = 0; n <= 30; ++n) {
        EXPECT_EQ(static_cast<std::int64_t>(partitions_of(n).size()), oracle::partition_count(n)) << n;
    }
}

TEST(ForEachPartition, DecreasingLexicographicAndDistinct) {
    for (int n = 1; n <= 20; ++n) {
        const auto all = partitions_of(n);
        EXPECT_EQ(all.front(), (Partition{n}));
        EXPECT_EQ(all.back(), Partition::hook(1, n));
        for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
        for (const auto& x : all) EXPECT_EQ(x.size(), n);
    }
}

TEST(ForEachPartition, NegativeIsRejected) {
    EXPECT_THROW(partitions_of(-1), Error);
}

TEST(DistinctOdd, Predicate) {
    const Modulus p3(3);
    EXPECT_TRUE(is_distinct_odd_nondivisible({17, 1}, p3));
    EXPECT_FALSE(is_distinct_odd_nondivisible({15, 3}, p3));
    EXPECT_FALSE(is_distinct_odd_nondivisible({7, 7}, p3));
    EXPECT_FALSE(is_distinct_odd_nondivisible({4}, p3));
    EXPECT_TRUE(is_distinct_odd_nondivisible({}, p3));
}

TEST(DiagonalHooks, RoundTrip) {
    EXPECT_EQ(diagonal_hook_partition({6, 5, 2, 2, 2, 1}), (Partition{11, 7}));
    EXPECT_EQ(self_conjugate_from_hooks({11, 7}), (Partition{6, 5, 2, 2, 2, 1}));
    EXPECT_EQ(self_conjugate_from_hooks({17, 1}), (Partition{9, 2, 1, 1, 1, 1, 1, 1, 1}));
    EXPECT_THROW(self_conjugate_from_hooks({4}), Error);
    for (int n = 0; n <= 24; ++n) {
        for_each_partition(n, [](const Partition& lambda) {
            if (!is_self_conjugate(lambda)) return;
            EXPECT_EQ(self_conjugate_from_hooks(diagonal_hook_partition(lambda)), lambda);
        });
    }
}

TEST(Census, ThreeEighteen) {
    const CensusReport r = census(Modulus(3), 18);
    EXPECT_EQ(r.all_count, 385);
    EXPECT_EQ(r.p_regular_count, 135);
    EXPECT_EQ(std::set<Partition>(r.self_conjugate.begin(), r.self_conjugate.end()),
              (std::set<Partition>{{9, 2, 1, 1, 1, 1, 1, 1, 1}, {8, 3, 2, 1, 1, 1, 1, 1},
                                   {7, 4, 2, 2, 1, 1, 1}, {6, 5, 2, 2, 2, 1}, {5, 4, 4, 4, 1}}));
    EXPECT_EQ(std::set<Partition>(r.bg.begin(), r.bg.end()),
              (std::set<Partition>{{6, 5, 2, 2, 2, 1}, {7, 4, 2, 2, 1, 1, 1}, {9, 2, 1, 1, 1, 1, 1, 1, 1}}));
    EXPECT_EQ(std::set<Partition>(r.self_mullineux.begin(), r.self_mullineux.end()),
              (std::set<Partition>{{7, 5, 2, 2, 1, 1}, {9, 4, 4, 1}, {10, 4, 4}}));
    EXPECT_EQ(std::set<Partition>(r.distinct_odd_nondiv.begin(), r.distinct_odd_nondiv.end()),
              (std::set<Partition>{{17, 1}, {13, 5}, {11, 7}}));
    ASSERT_EQ(r.pairs.size(), 3u);
    std::set<Partition> lefts;
    std::set<Partition> rights;
    for (const auto& pair : r.pairs) {
        lefts.insert(pair.bg);
        rights.insert(pair.mullineux);
    }
    EXPECT_EQ(lefts.size(), 3u);
    EXPECT_EQ(rights, (std::set<Partition>(r.self_mullineux.begin(), r.self_mullineux.end())));
}

TEST(Census, Empty) {
    const CensusReport r = census(Modulus(3), 0);
    EXPECT_EQ(r.all_count, 1);
    EXPECT_EQ(r.p_regular_count, 1);
    EXPECT_EQ(r.bg, ps({{}}));
    EXPECT_EQ(r.self_mullineux, ps({{}}));
    EXPECT_EQ(r.distinct_odd_nondiv, ps({{}}));
}

TEST(Census, FiveTwentyPairing) {
    const CensusReport r = census(Modulus(5), 20);
    const BijectionPair expected{{7, 5, 2, 2, 2, 1, 1}, {7, 6, 3, 2, 2}};
    EXPECT_NE(std::find(r.pairs.begin(), r.pairs.end(), expected), r.pairs.end());
    EXPECT_EQ(r.bg.size(), 5u);
}

TEST(GeneratingFunction, MatchesSubsetOracle) {
    EXPECT_EQ(bg_count_via_gf(Modulus(3), 30), kDistinctOddP3);
    EXPECT_EQ(bg_count_via_gf(Modulus(5), 30), kDistinctOddP5);
    EXPECT_EQ(bg_count_via_gf(Modulus(7), 30), kDistinctOddP7);
    for (int n = 0; n <= 30; ++n) {
        EXPECT_EQ(kDistinctOddP3[static_cast<std::size_t>(n)], oracle::distinct_odd_count(n, 3));
        EXPECT_EQ(kDistinctOddP5[static_cast<std::size_t>(n)], oracle::distinct_odd_count(n, 5));
        EXPECT_EQ(kDistinctOddP7[static_cast<std::size_t>(n)], oracle::distinct_odd_count(n, 7));
    }
}

TEST(GeneratingFunction, CountsAgreeWithCensus) {
    for (int p : {3, 5, 7}) {
        const Modulus m(p);
        const auto gf = bg_count_via_gf(m, 25);
        for (int n = 0; n <= 25; ++n) {
            const CensusReport r = census(m, n);
            const auto c = gf[static_cast<std::size_t>(n)];
            EXPECT_EQ(static_cast<std::int64_t>(r.bg.size()), c);
            EXPECT_EQ(static_cast<std::int64_t>(r.self_mullineux.size()), c);
            EXPECT_EQ(static_cast<std::int64_t>(r.distinct_odd_nondiv.size()), c);
            EXPECT_EQ(r.pairs.size(), r.bg.size());
        }
    }
}

TEST(GeneratingFunction, LargeRangeStaysExact) {
    const auto coef = bg_count_via_gf(Modulus(3), 400);
    ASSERT_EQ(coef.size(), 401u);
    for (auto c : coef) EXPECT_GE(c, 0);
    EXPECT_THROW(bg_count_via_gf(Modulus(3), -1), Error);
}
