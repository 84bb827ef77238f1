#include <gtest/gtest.h>

#include <sstream>

#include "flipbraid/errors.hpp"
#include "flipbraid/rational.hpp"
#include "generators.hpp"

namespace flipbraid {
namespace {

TEST(Rational, StoresLowestTermsWithPositiveDenominator) {
    const Rational r(6, -4);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(8, 4).to_string(), "2");
    EXPECT_EQ(Rational(0, -7).to_string(), "0");
}

TEST(Rational, ParsesTextForms) {
    EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
    EXPECT_EQ(Rational::parse("+7"), Rational(7));
    EXPECT_EQ(Rational::parse("-0"), Rational(0));
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/2/3", " 1"}) {
        EXPECT_ANY_THROW(Rational::parse(bad)) << bad;
    }
}

TEST(Rational, DivisionByZeroThrows) { EXPECT_THROW(Rational(1) / Rational(0), std::domain_error); }

TEST(Rational, OrderingAndStreaming) {
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
    EXPECT_GT(Rational(2, 3), Rational(3, 5));
    std::ostringstream os;
    os << Rational(-9, 6);
    EXPECT_EQ(os.str(), "-3/2");
    EXPECT_EQ(inverse_power_of_two(40), Rational(1, 1099511627776L));
}

TEST(RationalProperty, AdditionIsExactlyReversible) {
    testing::Rng rng(11);
    for (int t = 0; t < 2000; ++t) {
        const Rational a = testing::random_rational(rng, 1000000, 99991);
        const Rational b = testing::random_rational(rng, 1000000, 99991);
        ASSERT_EQ((a + b) - b, a);
        if (!b.is_zero()) ASSERT_EQ((a * b) / b, a);
    }
}

TEST(RationalProperty, TextRoundTrip) {
    testing::Rng rng(12);
    for (int t = 0; t < 1000; ++t) {
        const Rational a = testing::random_rational(rng, 1L << 40, 1L << 30);
        ASSERT_EQ(Rational::parse(a.to_string()), a);
    }
}

}  // namespace
}  // namespace flipbraid
