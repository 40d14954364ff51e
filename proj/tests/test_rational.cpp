#include <gtest/gtest.h>

#include <stdexcept>

#include "hurwitz/rational.hpp"

namespace hurwitz {
namespace {

TEST(Rational, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
}

TEST(Rational, ExactArithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 3) * Rational(3), Rational(1));
  EXPECT_EQ(Rational(1, 10) + Rational(2, 10), Rational(3, 10));
  EXPECT_EQ(Rational(7, 3) / Rational(7, 9), Rational(3));
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3"), Rational(3));
  EXPECT_EQ(Rational::parse("-4/6"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse(" 1/2 "), Rational(1, 2));
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, BeyondMachineIntegers) {
  Rational r(1);
  for (int i = 0; i < 100; ++i) r *= Rational(10);
  EXPECT_EQ(r / r, Rational(1));
  EXPECT_EQ(r.to_string().size(), 101u);
}

}  // namespace
}  // namespace hurwitz
