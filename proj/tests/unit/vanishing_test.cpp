#include <gtest/gtest.h>

#include <random>

#include "spfc/symplectic.hpp"
#include "spfc/vanishing.hpp"

using spfc::ArthurParameter;
using spfc::BoundSource;
using spfc::DualType;
using spfc::Partition;
using spfc::PointType;
using spfc::Rational;
using spfc::SquareClass;
using spfc::UnitaryDualPoint;
using spfc::UnramifiedCharacter;
using spfc::Verdict;
using spfc::VerdictMode;

namespace {

const UnramifiedCharacter kOne = UnramifiedCharacter::trivial();
const UnramifiedCharacter kChi = UnramifiedCharacter::generic("chi", "chi_inv");

UnitaryDualPoint sn_point(std::vector<int> lambda0, std::vector<int> trivial) {
    UnitaryDualPoint p;
    p.neg.sn = {std::move(lambda0), std::move(trivial)};
    p.n = p.neg.sn.rank();
    return p;
}

// Strictly increasing lists drawn from 0..max_value with odd length <= max_length.
std::vector<std::vector<int>> odd_length_lists(int max_length, int max_value) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1U << (max_value + 1)); ++mask) {
        std::vector<int> list;
        for (int v = 0; v <= max_value; ++v) {
            if (mask >> v & 1U) list.push_back(v);
        }
        if (list.size() % 2 == 1 && static_cast<int>(list.size()) <= max_length) out.push_back(list);
    }
    return out;
}

}  // namespace

TEST(BoundTypeI, Examples) {
    for (int m = 0; m <= 6; ++m) EXPECT_EQ(spfc::bound_type_I({m}).bound, Partition::repeated(1, 2 * m));
    EXPECT_EQ(spfc::bound_type_I({0, 1, 2}).bound, (Partition{2, 2, 2, 2}));
    EXPECT_EQ(spfc::bound_type_I({1, 2, 3}).bound, (Partition{3, 3, 2, 2, 2, 2}));
    EXPECT_EQ(spfc::bound_type_I({1}).source, BoundSource::TypeI);
}

TEST(BoundTypeI, Malformed) {
    EXPECT_THROW(spfc::bound_type_I({}), std::invalid_argument);
    EXPECT_THROW(spfc::bound_type_I({0, 1}), std::invalid_argument);
    EXPECT_THROW(spfc::bound_type_I({2, 1, 3}), std::invalid_argument);
    EXPECT_THROW(spfc::bound_type_I({1, 1, 3}), std::invalid_argument);
    EXPECT_THROW(spfc::bound_type_I({-1}), std::invalid_argument);
}

TEST(BoundTypeII, Examples) {
    EXPECT_EQ(spfc::bound_type_II({}).bound, Partition{});
    EXPECT_EQ(spfc::bound_type_II({0, 1}).bound, (Partition{2, 2}));
    EXPECT_EQ(spfc::bound_type_II({1, 2}).bound, (Partition{2, 2, 2, 2}));
    EXPECT_EQ(spfc::bound_type_II({1, 2}).source, BoundSource::TypeII);
    EXPECT_THROW(spfc::bound_type_II({1}), std::invalid_argument);
    EXPECT_THROW(spfc::bound_type_II({2, 1}), std::invalid_argument);
}

TEST(BoundTypeIII, ReducesToTypeI) {
    EXPECT_EQ(spfc::bound_type_III(sn_point({}, {1, 3, 5})).bound, spfc::bound_type_I({0, 1, 2}).bound);
    EXPECT_EQ(spfc::bound_type_III(sn_point({}, {3, 5, 9})).bound, spfc::bound_type_I({1, 2, 4}).bound);
}

TEST(BoundTypeIII, GenericExponent) {
    UnitaryDualPoint p = sn_point({}, {1});
    p.e = {{kChi, 2, Rational(3, 10)}};
    p.n = 2;
    spfc::BoundTrace trace;
    auto b = spfc::bound_type_III(p, &trace);
    EXPECT_EQ(b.bound, (Partition{2, 2}));
    EXPECT_EQ(b.source, BoundSource::TypeIII);
    EXPECT_TRUE(spfc::verify_duality_identity(p));
    ASSERT_FALSE(trace.empty());
    EXPECT_EQ(trace.back().first, "bound");
    EXPECT_EQ(trace.back().second, b.bound);
}

TEST(BoundTypeIII, BlockFamilyPoint) {
    // The parameter (tau, 4) + (1, 1) with tau on GL_2 at a place where the
    // Satake entry has exponent 0.
    ArthurParameter psi{4, {{"tau", 2, 4, DualType::Symplectic, SquareClass()},
                            {"one", 1, 1, DualType::Orthogonal, SquareClass()}}};
    spfc::LocalSatakeData local{std::nullopt, {{{kChi, Rational(0)}}, {}}};
    auto point = spfc::build_local_data(psi, local).point;
    EXPECT_EQ(spfc::bound_type_III(point).bound, (Partition{2, 2, 2, 2}));
    EXPECT_EQ(spfc::bound_type_III(point).bound, spfc::fc_bound(psi));
    EXPECT_TRUE(spfc::verify_duality_identity(point));
}

TEST(BoundTypeIII, WrongType) {
    EXPECT_THROW(spfc::bound_type_III(sn_point({1, 3}, {1})), std::invalid_argument);
    EXPECT_THROW(spfc::bound_type_IV(sn_point({}, {3})), std::invalid_argument);
    EXPECT_THROW(spfc::bound_for_point(sn_point({1, 3}, {5})), std::invalid_argument);
}

TEST(BoundTypeIV, Examples) {
    auto pure = sn_point({1, 3}, {1});
    EXPECT_EQ(spfc::bound_type_IV(pure).bound, (Partition{2, 2}));
    EXPECT_EQ(spfc::bound_type_IV(pure).bound, spfc::bound_type_II({0, 1}).bound);
    EXPECT_EQ(spfc::bound_type_IV(sn_point({3, 7}, {1})).bound, spfc::bound_type_II({1, 3}).bound);

    UnitaryDualPoint p = sn_point({1, 3}, {1});
    p.e = {{UnramifiedCharacter::lambda0(), 2, Rational(1, 3)}};
    p.neg.gl_blocks = {{kOne, 1}};
    p.n = 5;
    EXPECT_EQ(spfc::classify_type(p), PointType::TypeIV);
    EXPECT_EQ(spfc::bound_type_IV(p).bound, (Partition{6, 4}));
    EXPECT_TRUE(spfc::verify_duality_identity(p));
}

TEST(DualityIdentity, Examples) {
    for (int n = 0; n <= 8; ++n) {
        auto p = sn_point({}, {2 * n + 1});
        EXPECT_TRUE(spfc::verify_duality_identity(p));
        EXPECT_EQ(spfc::duality_target(p), Partition::repeated(1, 2 * n));
    }
    EXPECT_FALSE(spfc::verify_duality_identity(sn_point({1, 3}, {5})));
}

TEST(DualityIdentity, ExhaustiveSmallRanks) {
    for (int n = 0; n <= 6; ++n) {
        int count = 0;
        spfc::for_each_pure_point(n, [&](const UnitaryDualPoint& p) {
            EXPECT_NO_THROW(spfc::check_structure(p));
            EXPECT_TRUE(spfc::verify_duality_identity(p)) << spfc::to_string(spfc::orbit_partition(p));
            ++count;
            return true;
        });
        EXPECT_GT(count, 0);
    }
}

TEST(DualityIdentity, RandomPoints) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        auto p = spfc::random_pure_point(rng, 30);
        ASSERT_LE(p.n, 30);
        ASSERT_NO_THROW(spfc::check_structure(p));
        ASSERT_NE(spfc::classify_type(p), PointType::Mixed);
        ASSERT_TRUE(spfc::verify_duality_identity(p));
    }
}

TEST(DualityIdentity, CampaignIsDeterministic) {
    auto a = spfc::run_identity_campaign(4, 50, 3);
    auto b = spfc::run_identity_campaign(4, 50, 3);
    EXPECT_EQ(a.exhaustive_checked, b.exhaustive_checked);
    EXPECT_EQ(a.random_checked, 50);
    EXPECT_TRUE(a.failures.empty());
    std::mt19937_64 r1(8), r2(8);
    for (int i = 0; i < 20; ++i) EXPECT_EQ(spfc::random_pure_point(r1, 30), spfc::random_pure_point(r2, 30));
}

TEST(ClosedForm, MatchesDualForSmallLists) {
    for (const auto& m : odd_length_lists(7, 10)) {
        ASSERT_EQ(spfc::type_I_closed_form(m), spfc::bound_type_I(m).bound) << m.size();
    }
}

TEST(ExponentIdentity, Examples) {
    EXPECT_TRUE(spfc::exponent_identity({0, 1, 2, 3, 4}));
    EXPECT_TRUE(spfc::exponent_identity({1, 3, 5, 7, 9}));
    EXPECT_THROW(spfc::exponent_identity({0, 1, 2}), std::invalid_argument);
    EXPECT_THROW(spfc::exponent_identity({0, 1, 2, 3}), std::invalid_argument);
}

TEST(ExponentIdentity, HoldsForSmallLists) {
    for (const auto& m : odd_length_lists(7, 10)) {
        if (m.size() < 5) continue;
        ASSERT_TRUE(spfc::exponent_identity(m));
    }
}

TEST(Verdict, Examples) {
    Partition bound{2, 2, 2, 2};
    EXPECT_EQ(spfc::verdict(Partition{4, 4}, bound, VerdictMode::Dominance), Verdict::ForcedVanishDominance);
    EXPECT_EQ(spfc::verdict(Partition{4, 1, 1, 1, 1}, bound, VerdictMode::Lex), Verdict::ForcedVanishLex);
    EXPECT_EQ(spfc::verdict(Partition{4, 1, 1, 1, 1}, bound, VerdictMode::Dominance), Verdict::NotDetermined);
    EXPECT_EQ(spfc::verdict(Partition{2, 2, 2, 1, 1}, bound, VerdictMode::Dominance), Verdict::NotDetermined);
    EXPECT_EQ(spfc::verdict(Partition{2, 2, 2, 1, 1}, bound, VerdictMode::Lex), Verdict::NotDetermined);
    EXPECT_EQ(spfc::verdict(bound, bound, VerdictMode::Dominance), Verdict::NotDetermined);
    EXPECT_EQ(spfc::verdict(Partition{4, 4}, spfc::VanishingBound{bound, BoundSource::TypeI}, VerdictMode::Lex),
              Verdict::NotDetermined);
}

TEST(Verdict, Errors) {
    EXPECT_THROW(spfc::verdict(Partition{3, 1}, Partition{2, 2}, VerdictMode::Dominance), std::invalid_argument);
    EXPECT_THROW(spfc::verdict(Partition{4}, Partition{2, 2, 2}, VerdictMode::Lex), std::invalid_argument);
    EXPECT_EQ(spfc::parse_verdict_mode("lex"), VerdictMode::Lex);
    EXPECT_THROW(spfc::parse_verdict_mode("Lex"), std::invalid_argument);
}

TEST(Verdict, LexNeverOverridesDominance) {
    for (int total = 2; total <= 16; total += 2) {
        const auto all = spfc::enumerate_symplectic(total);
        for (const auto& c : all) {
            for (const auto& b : all) {
                auto rel = spfc::dominance_compare(c, b);
                auto lex = spfc::verdict(c, b, VerdictMode::Lex);
                if (rel == spfc::OrderRelation::Greater) ASSERT_EQ(lex, Verdict::NotDetermined);
                if (lex == Verdict::ForcedVanishLex) ASSERT_EQ(rel, spfc::OrderRelation::Incomparable);
            }
        }
    }
}

TEST(Verdict, BlockFamilyIncomparablesAreLexGreater) {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 1; n <= 3; ++n) {
            Partition bound = Partition::repeated(2 * n, 2 * m);
            for (const auto& c : spfc::enumerate_symplectic(4 * m * n)) {
                if (spfc::dominance_compare(c, bound) != spfc::OrderRelation::Incomparable) continue;
                ASSERT_EQ(spfc::verdict(c, bound, VerdictMode::Lex), Verdict::ForcedVanishLex) << spfc::to_string(c);
            }
        }
    }
}
