#include "circdet/exactmath.hpp"
#include "circdet/partitions.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

namespace circdet {
namespace {

TEST(IntegerPartitions, SmallCases) {
    auto three = integer_partitions(3);
    ASSERT_EQ(three.size(), 3u);
    EXPECT_EQ(three[0].parts, (std::vector<int>{3}));
    EXPECT_EQ(three[1].parts, (std::vector<int>{2, 1}));
    EXPECT_EQ(three[2].parts, (std::vector<int>{1, 1, 1}));
    auto zero = integer_partitions(0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].parts.empty());
    EXPECT_EQ(integer_partitions(5).size(), 7u);
}

TEST(IntegerPartitions, CountsAndConsistency) {
    const std::vector<std::size_t> p_of_n{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int p = 0; p < static_cast<int>(p_of_n.size()); ++p) {
        auto parts = integer_partitions(p);
        EXPECT_EQ(parts.size(), p_of_n[p]);
        for (const auto& z : parts) {
            EXPECT_EQ(z.total(), p);
            EXPECT_TRUE(std::is_sorted(z.parts.rbegin(), z.parts.rend()));
            int weighted = 0;
            for (int i = 1; i <= p; ++i) weighted += i * z.multiplicities[i - 1];
            EXPECT_EQ(weighted, p);
        }
    }
}

// Reference: every assignment of positions to blocks, deduplicated as a
// multiset of sorted sub-multisets.
std::set<std::multiset<std::vector<int>>> brute_partitions(const std::vector<int>& elements) {
    std::set<std::multiset<std::vector<int>>> out;
    const int n = static_cast<int>(elements.size());
    std::vector<int> label(n, 0);
    std::function<void(int, int)> rec = [&](int i, int blocks) {
        if (i == n) {
            std::vector<std::vector<int>> parts(blocks);
            for (int k = 0; k < n; ++k) parts[label[k]].push_back(elements[k]);
            std::multiset<std::vector<int>> key;
            for (auto& p : parts) {
                std::sort(p.begin(), p.end());
                key.insert(p);
            }
            out.insert(key);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            label[i] = b;
            rec(i + 1, std::max(blocks, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

TEST(MultisetPartitions, Examples) {
    EXPECT_EQ(multiset_partitions({1, 1, 2, 3}).size(), 11u);
    EXPECT_EQ(multiset_partitions({3, 7, 8}).size(), 5u);
    EXPECT_EQ(multiset_partitions({4}).size(), 1u);
    // Empty multiset: the single empty partition (Bell(0) = 1).
    auto empty = multiset_partitions({});
    ASSERT_EQ(empty.size(), 1u);
    EXPECT_TRUE(empty[0].parts.empty());
}

TEST(MultisetPartitions, BellNumbersForDistinctElements) {
    const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 0; n < static_cast<int>(bell.size()); ++n) {
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[i] = i;
        EXPECT_EQ(multiset_partitions(e).size(), bell[n]) << n;
    }
}

TEST(MultisetPartitions, MatchesBruteForceOnRandomMultisets) {
    auto rng = testing::make_rng(2);
    for (int trial = 0; trial < 60; ++trial) {
        int size = testing::uniform(rng, 0, 7);
        auto elements = testing::random_multiset(rng, size, testing::uniform(rng, 0, 4));
        auto expected = brute_partitions(elements);
        std::set<std::multiset<std::vector<int>>> got;
        std::size_t visits = 0;
        for_each_multiset_partition(elements, [&](const SetPartition& sp) {
            ++visits;
            std::multiset<std::vector<int>> key;
            for (const auto& part : sp.parts) {
                EXPECT_GE(part.copies, 1);
                for (int c = 0; c < part.copies; ++c) key.insert(part.elements);
            }
            EXPECT_EQ(sp.elements(), elements);
            EXPECT_EQ(static_cast<std::size_t>(sp.block_count()), key.size());
            got.insert(key);
        });
        EXPECT_EQ(visits, got.size()) << "duplicate partitions emitted";
        EXPECT_EQ(got, expected);
    }
}

TEST(PartResidue, Examples) {
    EXPECT_EQ(part_residue({3, 7, 8}, 10), 2);
    EXPECT_EQ(part_residue({3, 7}, 10), 0);
    EXPECT_EQ(part_residue({2, 3, 4, 5}, 7), 0);
    EXPECT_EQ(part_residue({1}, 5), 4);
}

TEST(LabeledPartitions, CountIsBell) {
    const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203, 877};
    for (int p = 0; p < static_cast<int>(bell.size()); ++p) {
        std::size_t n = 0;
        for_each_labeled_partition(p, [&](const std::vector<std::vector<int>>& blocks) {
            ++n;
            std::vector<int> seen;
            for (const auto& b : blocks) {
                EXPECT_FALSE(b.empty());
                seen.insert(seen.end(), b.begin(), b.end());
            }
            std::sort(seen.begin(), seen.end());
            for (int i = 0; i < p; ++i) EXPECT_EQ(seen[i], i);
        });
        EXPECT_EQ(n, bell[p]);
    }
}

}  // namespace
}  // namespace circdet
