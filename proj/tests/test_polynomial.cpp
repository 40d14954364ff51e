#include <gtest/gtest.h>

#include "hurwitz/polynomial.hpp"

namespace hurwitz {
namespace {

TEST(Polynomial, ExpandsAndCancels) {
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  const Polynomial sq = (x + y) * (x + y);
  EXPECT_EQ(sq.coefficient({2, 0}), Rational(1));
  EXPECT_EQ(sq.coefficient({1, 1}), Rational(2));
  EXPECT_EQ(sq.coefficient({0, 2}), Rational(1));
  EXPECT_TRUE(((x + y) * (x - y) - (x * x - y * y)).is_zero());
}

TEST(Polynomial, TwoSquareIdentity) {
  // (a^2 + b^2)(c^2 + d^2) = (ac - bd)^2 + (ad + bc)^2
  const Polynomial a = Polynomial::variable(4, 0), b = Polynomial::variable(4, 1);
  const Polynomial c = Polynomial::variable(4, 2), d = Polynomial::variable(4, 3);
  const Polynomial lhs = (a * a + b * b) * (c * c + d * d);
  const Polynomial p = a * c - b * d, q = a * d + b * c;
  EXPECT_EQ(lhs, p * p + q * q);
}

TEST(Polynomial, ToString) {
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  EXPECT_EQ((x * x - Polynomial::constant(2, 2) * y).to_string(), "-2*x1 + x0^2");
  EXPECT_EQ(Polynomial(3).to_string(), "0");
}

TEST(Polynomial, VariableCountMismatch) {
  EXPECT_THROW(Polynomial::variable(2, 0) + Polynomial::variable(3, 0), std::invalid_argument);
  EXPECT_THROW(Polynomial::variable(2, 2), std::out_of_range);
}

}  // namespace
}  // namespace hurwitz
