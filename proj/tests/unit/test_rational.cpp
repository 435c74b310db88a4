#include <gtest/gtest.h>

#include "kpairs/rational.hpp"

using kpairs::Rational;

TEST(Rational, ParsesAndPrintsCanonicalForm) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-8").str(), "-8");
  EXPECT_EQ(Rational::parse("4/2").str(), "2");
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  EXPECT_THROW(Rational::parse("abc"), std::exception);
}

TEST(Rational, ArithmeticIsExact) {
  const Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_LT(b, a);
  EXPECT_THROW(a / Rational(0), std::exception);
}

TEST(Rational, DecimalViewUsesSixSignificantDigits) {
  EXPECT_EQ(kpairs::to_decimal(Rational(8, 7)), "1.14286");
  EXPECT_EQ(kpairs::to_decimal(Rational(1, 4)), "0.25");
}
