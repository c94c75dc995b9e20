#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spfc/squareclass.hpp"

using spfc::ClassPower;
using spfc::SquareClass;

TEST(SquarefreeClass, Examples) {
    EXPECT_EQ(spfc::squarefree_class(12).value(), 3);
    EXPECT_EQ(spfc::squarefree_class(1).value(), 1);
    EXPECT_EQ(spfc::squarefree_class(-18).value(), -2);
    EXPECT_EQ(spfc::squarefree_class(-1).value(), -1);
    EXPECT_EQ(spfc::squarefree_class(72).value(), 2);
    EXPECT_THROW(spfc::squarefree_class(0), std::invalid_argument);
}

TEST(SquareClassValue, Validation) {
    EXPECT_TRUE(SquareClass().is_trivial());
    EXPECT_NO_THROW(SquareClass(-6));
    EXPECT_THROW(SquareClass(12), std::invalid_argument);
    EXPECT_THROW(SquareClass(0), std::invalid_argument);
    EXPECT_TRUE(spfc::is_squarefree(30));
    EXPECT_FALSE(spfc::is_squarefree(50));
    EXPECT_EQ(spfc::to_string(SquareClass(-3)), "-3");
}

TEST(ClassProduct, Examples) {
    std::vector<ClassPower> a{{SquareClass(3), 1}, {SquareClass(3), 3}};
    EXPECT_TRUE(spfc::class_product(a).is_trivial());
    std::vector<ClassPower> b{{SquareClass(7), 2}};
    EXPECT_TRUE(spfc::class_product(b).is_trivial());
    std::vector<ClassPower> c{{SquareClass(2), 1}, {SquareClass(3), 1}};
    EXPECT_EQ(spfc::class_product(c).value(), 6);
    std::vector<ClassPower> d{{SquareClass(-2), 1}, {SquareClass(-3), 1}};
    EXPECT_EQ(spfc::class_product(d).value(), 6);
    std::vector<ClassPower> e{{SquareClass(-1), 1}, {SquareClass(6), 1}, {SquareClass(10), 1}};
    EXPECT_EQ(spfc::class_product(e).value(), -15);
}

TEST(ParityCondition, Examples) {
    std::vector<ClassPower> a{{SquareClass(3), 1}, {SquareClass(3), 3}};
    EXPECT_TRUE(spfc::parity_condition(a));
    std::vector<ClassPower> b{{SquareClass(2), 1}, {SquareClass(5), 2}};
    EXPECT_FALSE(spfc::parity_condition(b));
    std::vector<ClassPower> c{{SquareClass(), 1}, {SquareClass(), 3}};
    EXPECT_TRUE(spfc::parity_condition(c));
}

TEST(Legendre, MatchesEulerCriterion) {
    for (std::int64_t p = 3; p < 400; p += 2) {
        if (!oracle::is_prime(p)) continue;
        for (std::int64_t a = -40; a <= 40; ++a) {
            ASSERT_EQ(spfc::legendre_symbol(a, p), oracle::euler_criterion(a, p)) << a << " mod " << p;
        }
    }
    EXPECT_THROW(spfc::legendre_symbol(2, 2), std::invalid_argument);
    EXPECT_THROW(spfc::legendre_symbol(2, 9), std::invalid_argument);
}

TEST(QrPrimes, Examples) {
    std::vector<SquareClass> two{SquareClass(2)};
    EXPECT_EQ(spfc::qr_primes(two, 3, 100), (std::vector<std::int64_t>{7, 17, 23}));
    std::vector<SquareClass> one{SquareClass()};
    EXPECT_EQ(spfc::qr_primes(one, 1, 10), (std::vector<std::int64_t>{3}));
    std::vector<SquareClass> three{SquareClass(2), SquareClass(3), SquareClass(5)};
    EXPECT_EQ(spfc::qr_primes(three, 2, 300), (std::vector<std::int64_t>{71, 191}));
    EXPECT_EQ(spfc::qr_primes(three, 4, 300), (std::vector<std::int64_t>{71, 191, 239, 241}));
}

TEST(QrPrimes, MinusOneMeansOneModFour) {
    std::vector<SquareClass> m1{SquareClass(-1)};
    for (auto p : spfc::qr_primes(m1, 20, 10000)) EXPECT_EQ(p % 4, 1);
}

TEST(QrPrimes, ResultsVerifiedByEulerCriterion) {
    std::vector<std::vector<SquareClass>> inputs{
        {SquareClass(2), SquareClass(3), SquareClass(5)},
        {SquareClass(-1), SquareClass(7)},
        {SquareClass(-3), SquareClass(11), SquareClass(13)},
    };
    for (const auto& classes : inputs) {
        auto primes = spfc::qr_primes(classes, 10, 100000);
        ASSERT_EQ(primes.size(), 10U);
        for (auto p : primes) {
            EXPECT_TRUE(oracle::is_prime(p));
            for (auto c : classes) EXPECT_EQ(oracle::euler_criterion(c.value(), p), 1) << c.value() << " mod " << p;
        }
    }
}

TEST(QrPrimes, Insufficient) {
    std::vector<SquareClass> classes{SquareClass(2), SquareClass(3), SquareClass(5)};
    EXPECT_THROW(spfc::qr_primes(classes, 5, 100), std::runtime_error);
}
