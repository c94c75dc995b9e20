#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "spfc/partition.hpp"

using spfc::OrderRelation;
using spfc::Partition;

TEST(Parse, ExponentNotation) {
    Partition p = spfc::parse_partition("[5^2 4^4 2^3 1^2]");
    EXPECT_EQ(p.vector(), (std::vector<int>{5, 5, 4, 4, 4, 4, 2, 2, 2, 1, 1}));
    EXPECT_EQ(p.total(), 34);
}

TEST(Parse, EmptyText) {
    EXPECT_TRUE(spfc::parse_partition("").empty());
    EXPECT_TRUE(spfc::parse_partition("[]").empty());
    EXPECT_EQ(spfc::parse_partition("").total(), 0);
}

TEST(Parse, CommaListIsSorted) {
    EXPECT_EQ(spfc::parse_partition("3,1,2").vector(), (std::vector<int>{3, 2, 1}));
}

TEST(Parse, FormsAgree) {
    EXPECT_EQ(spfc::parse_partition("5,5,4,1"), spfc::parse_partition("[5^2 4 1]"));
    EXPECT_EQ(spfc::parse_partition(" 4^2 1 "), spfc::parse_partition("[4,4,1]"));
}

TEST(Parse, RejectsMalformed) {
    EXPECT_THROW(spfc::parse_partition("3,0,1"), std::invalid_argument);
    EXPECT_THROW(spfc::parse_partition("3,-1"), std::invalid_argument);
    EXPECT_THROW(spfc::parse_partition("[5^0 1]"), std::invalid_argument);
    EXPECT_THROW(spfc::parse_partition("[5 4"), std::invalid_argument);
    EXPECT_THROW(spfc::parse_partition("a,b"), std::invalid_argument);
    EXPECT_THROW(spfc::parse_partition("3,,1"), std::invalid_argument);
}

TEST(Format, ExponentNotationRoundTrip) {
    Partition p{5, 5, 4, 4, 4, 4, 2, 2, 2, 1, 1};
    EXPECT_EQ(spfc::to_string(p), "[5^2 4^4 2^3 1^2]");
    EXPECT_EQ(spfc::to_string(Partition{}), "[]");
    EXPECT_EQ(spfc::to_string(Partition{4, 1}), "[4 1]");
    EXPECT_EQ(spfc::to_comma_string(Partition{4, 4, 1}), "4,4,1");
    std::ostringstream os;
    os << Partition{3, 3};
    EXPECT_EQ(os.str(), "[3^2]");
    EXPECT_EQ(spfc::parse_partition(spfc::to_string(p)), p);
}

TEST(Construct, DropsZerosAndSorts) {
    Partition p(std::vector<int>{0, 2, 0, 3});
    EXPECT_EQ(p.vector(), (std::vector<int>{3, 2}));
    EXPECT_THROW(Partition(std::vector<int>{-1}), std::invalid_argument);
    EXPECT_EQ(Partition::repeated(2, 3), (Partition{2, 2, 2}));
    EXPECT_EQ(Partition({4, 4, 1}).multiplicity(4), 2);
    EXPECT_EQ(Partition({4, 4, 1}).multiplicity(3), 0);
}

TEST(Transpose, Examples) {
    EXPECT_EQ(spfc::transpose(Partition{4}), (Partition{1, 1, 1, 1}));
    EXPECT_EQ(spfc::transpose(Partition{}), Partition{});
    EXPECT_EQ(spfc::transpose(Partition{4, 4}), (Partition{2, 2, 2, 2}));
}

TEST(Concat, Examples) {
    EXPECT_EQ(spfc::concat(Partition{3, 3}, Partition{2}), (Partition{3, 3, 2}));
    EXPECT_EQ(spfc::concat(Partition{5, 1}, Partition{}), (Partition{5, 1}));
    EXPECT_EQ(spfc::concat(Partition{4, 1}, Partition{3, 3}), (Partition{4, 3, 3, 1}));
}

TEST(Add, Examples) {
    EXPECT_EQ(spfc::add(Partition{1, 1, 1}, Partition{1, 1}), (Partition{2, 2, 1}));
    EXPECT_EQ(spfc::add(Partition{5, 1}, Partition{}), (Partition{5, 1}));
    EXPECT_EQ(spfc::add(Partition{3, 1}, Partition{2, 2, 2}), (Partition{5, 3, 2}));
}

TEST(Dominance, Examples) {
    EXPECT_EQ(spfc::dominance_compare(Partition{4, 2}, Partition{3, 3}), OrderRelation::Greater);
    EXPECT_EQ(spfc::dominance_compare(Partition{3, 3}, Partition{4, 2}), OrderRelation::Less);
    EXPECT_EQ(spfc::dominance_compare(Partition{3, 2, 1}, Partition{3, 2, 1}), OrderRelation::Equal);
    EXPECT_EQ(spfc::dominance_compare(Partition{4, 1, 1, 1, 1}, Partition{2, 2, 2, 2}), OrderRelation::Incomparable);
}

TEST(Dominance, DifferentTotalsUsePrefixSums) {
    EXPECT_EQ(spfc::dominance_compare(Partition{3}, Partition{2}), OrderRelation::Greater);
    EXPECT_EQ(spfc::dominance_compare(Partition{2, 2}, Partition{3}), OrderRelation::Incomparable);
}

TEST(Lex, Examples) {
    EXPECT_EQ(spfc::lex_compare(Partition{4, 1, 1, 1, 1}, Partition{2, 2, 2, 2}), OrderRelation::Greater);
    EXPECT_EQ(spfc::lex_compare(Partition{2, 1}, Partition{2, 1}), OrderRelation::Equal);
    EXPECT_EQ(spfc::lex_compare(Partition{2, 2}, Partition{2, 2, 1}), OrderRelation::Less);
}

TEST(Enumerate, SmallCounts) {
    auto zero = spfc::enumerate_partitions(0);
    ASSERT_EQ(zero.size(), 1U);
    EXPECT_TRUE(zero.front().empty());
    EXPECT_EQ(spfc::enumerate_partitions(4).size(), 5U);
    EXPECT_EQ(spfc::enumerate_partitions(10).size(), 42U);
}

TEST(Enumerate, CapAndNegative) {
    EXPECT_THROW(spfc::enumerate_partitions(41), std::out_of_range);
    EXPECT_THROW(spfc::enumerate_partitions(-1), std::out_of_range);
    EXPECT_NO_THROW(spfc::enumerate_partitions(5, 5));
}

TEST(Enumerate, DecreasingLexOrderEachOnce) {
    for (int n = 1; n <= 20; ++n) {
        auto all = spfc::enumerate_partitions(n);
        EXPECT_EQ(static_cast<std::int64_t>(all.size()), oracle::partition_count(n)) << "n=" << n;
        std::set<std::vector<int>> seen;
        for (std::size_t i = 0; i < all.size(); ++i) {
            EXPECT_EQ(all[i].total(), n);
            EXPECT_TRUE(seen.insert(all[i].vector()).second);
            if (i > 0) EXPECT_EQ(spfc::lex_compare(all[i - 1], all[i]), OrderRelation::Greater);
        }
    }
}

TEST(Enumerate, EarlyStop) {
    int visited = 0;
    spfc::for_each_partition(10, [&](const Partition&) { return ++visited < 3; });
    EXPECT_EQ(visited, 3);
}

class PartitionProperties : public ::testing::TestWithParam<int> {};

TEST_P(PartitionProperties, TransposeMatchesGridAndIsInvolution) {
    for (const auto& p : spfc::enumerate_partitions(GetParam())) {
        auto t = spfc::transpose(p);
        EXPECT_EQ(t.vector(), oracle::grid_transpose(p.vector()));
        EXPECT_EQ(spfc::transpose(t), p);
    }
}

TEST_P(PartitionProperties, OrdersAgreeWithPrefixOracle) {
    const auto all = spfc::enumerate_partitions(GetParam());
    for (const auto& p : all) {
        for (const auto& q : all) {
            auto rel = spfc::dominance_compare(p, q);
            bool pq = oracle::dominates(p.vector(), q.vector());
            bool qp = oracle::dominates(q.vector(), p.vector());
            OrderRelation expected = pq && qp ? OrderRelation::Equal
                                   : pq       ? OrderRelation::Greater
                                   : qp       ? OrderRelation::Less
                                              : OrderRelation::Incomparable;
            ASSERT_EQ(rel, expected);
            if (rel == OrderRelation::Greater) {
                ASSERT_EQ(spfc::dominance_compare(spfc::transpose(q), spfc::transpose(p)), OrderRelation::Greater);
                ASSERT_EQ(spfc::lex_compare(p, q), OrderRelation::Greater);
            }
        }
    }
}

TEST_P(PartitionProperties, TransposeTurnsConcatIntoAdd) {
    const int n = GetParam();
    for (int k = 0; k <= n; ++k) {
        for (const auto& p : spfc::enumerate_partitions(k)) {
            for (const auto& q : spfc::enumerate_partitions(n - k)) {
                ASSERT_EQ(spfc::transpose(spfc::concat(p, q)), spfc::add(spfc::transpose(p), spfc::transpose(q)));
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Totals, PartitionProperties, ::testing::Range(0, 12));
