#include <gtest/gtest.h>

#include "hurwitz/element.hpp"
#include "hurwitz/sampling.hpp"

namespace hurwitz {
namespace {

TEST(Element, Add) {
  EXPECT_EQ(add(Element{1, 0}, Element{0, 1}), (Element{1, 1}));
  EXPECT_EQ(add(Element{Rational(1, 2), Rational(1, 3)}, Element{Rational(1, 2), Rational(2, 3)}),
            (Element{1, 1}));
  const Element x{3, -1, Rational(2, 7), 5};
  EXPECT_EQ(add(x, Element::zero(4)), x);
}

TEST(Element, Scale) {
  EXPECT_EQ(scale(2, Element{1, 3}), (Element{2, 6}));
  EXPECT_EQ(scale(0, Element{1, 3}), Element::zero(2));
  EXPECT_EQ(scale(-1, Element{1, -2, 0, 5}), (Element{-1, 2, 0, -5}));
}

TEST(Element, InnerAndNorm) {
  EXPECT_EQ(inner(Element{1, 0}, Element{0, 1}), Rational(0));
  EXPECT_EQ(inner(Element{1, 2}, Element{3, 4}), Rational(11));
  EXPECT_EQ(norm_sq(Element{1, 1}), Rational(2));
  EXPECT_EQ(norm_sq(Element::zero(8)), Rational(0));
  EXPECT_EQ(norm_sq(Element{3, 4}), Rational(25));
}

TEST(Element, DimensionMismatchThrows) {
  const Element a{1, 0};
  const Element b{1, 0, 0, 0};
  EXPECT_THROW(add(a, b), DimensionError);
  EXPECT_THROW(inner(a, b), DimensionError);
  EXPECT_THROW(orthogonal(a, b), DimensionError);
  EXPECT_THROW(equality_statement_holds(a, b), DimensionError);
}

TEST(Element, UnsupportedDimensionThrows) {
  EXPECT_THROW(Element(3), DimensionError);
  EXPECT_THROW(Element(0), DimensionError);
  EXPECT_THROW((Element{1, 2, 3}), DimensionError);
  EXPECT_THROW(Element::basis(4, 4), DimensionError);
}

TEST(Element, EqualityStatementExamples) {
  EXPECT_TRUE(equality_statement_holds(Element{1, 0}, Element{1, 0}));
  // Equal norms, but norm_sq(x + y) = 2 != 4.
  EXPECT_FALSE(equality_statement_holds(Element{1, 0}, Element{0, 1}));
  // Collinear with unequal norms.
  EXPECT_FALSE(equality_statement_holds(Element{1, 0}, Element{2, 0}));
  // Equal norms, opposite rays: the sign condition rules it out.
  EXPECT_FALSE(equality_statement_holds(Element{1, 0}, Element{-1, 0}));
}

TEST(Element, OrthogonalExamples) {
  const Element e0 = Element::basis(2, 0);
  const Element e1 = Element::basis(2, 1);
  EXPECT_TRUE(orthogonal(e0, e1));
  EXPECT_EQ(norm_sq(e0 + e1), Rational(2));
  EXPECT_FALSE(orthogonal(Element{3, 1}, Element{3, 1}));
  EXPECT_TRUE(orthogonal(Element{1, 1}, Element{1, -1}));
}

class ElementProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(ElementProperties, ParallelogramLaw) {
  const std::size_t dim = GetParam();
  RationalSampler s(11 + dim);
  for (int i = 0; i < 200; ++i) {
    const Element x = s.element(dim);
    const Element y = s.element(dim);
    EXPECT_EQ(norm_sq(x + y) + norm_sq(x - y), Rational(2) * norm_sq(x) + Rational(2) * norm_sq(y));
  }
}

TEST_P(ElementProperties, OrthogonalityStatementForUnitVectors) {
  const std::size_t dim = GetParam();
  // Signed basis vectors are the rational unit vectors; check all pairs.
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      for (int sign : {1, -1}) {
        const Element x = Element::basis(dim, j);
        const Element y = scale(sign, Element::basis(dim, k));
        EXPECT_EQ(orthogonal(x, y), norm_sq(x + y) == Rational(2));
      }
    }
  }
  // And rational unit vectors from Pythagorean triples: (3/5, 4/5, 0, ...).
  if (dim >= 2) {
    Element x(dim), y(dim);
    x[0] = Rational(3, 5);
    x[1] = Rational(4, 5);
    y[0] = Rational(-4, 5);
    y[1] = Rational(3, 5);
    EXPECT_TRUE(orthogonal(x, y));
    EXPECT_EQ(norm_sq(x + y), Rational(2));
    EXPECT_FALSE(orthogonal(x, x));
    EXPECT_NE(norm_sq(x + x), Rational(2));
  }
}

TEST_P(ElementProperties, EqualityStatementAgreesWithEquality) {
  const std::size_t dim = GetParam();
  RationalSampler s(97 + dim);
  for (int i = 0; i < 1000; ++i) {
    const Element x = s.element(dim);
    Element y = s.element(dim);
    switch (i % 4) {
      case 0: y = x; break;                          // equal
      case 1: y = scale(s.next_nonzero(), x); break;  // collinear
      case 2: y = -x; break;                          // opposite ray
      default: break;                                 // unrelated
    }
    EXPECT_EQ(equality_statement_holds(x, y), x == y) << x << " vs " << y;
  }
}

INSTANTIATE_TEST_SUITE_P(AllDims, ElementProperties, ::testing::Values(1, 2, 4, 8, 16));

TEST(GramSchmidt, ProducesOrthogonalVectors) {
  RationalSampler s(5);
  std::vector<Element> v;
  for (int i = 0; i < 5; ++i) v.push_back(s.element(8));
  const auto w = gram_schmidt(v);
  for (std::size_t i = 0; i < w.size(); ++i) {
    EXPECT_FALSE(w[i].is_zero());
    for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(orthogonal(w[i], w[j]));
  }
}

TEST(RationalSampler, DeterministicAndBounded) {
  RationalSampler a(42), b(42);
  for (int i = 0; i < 500; ++i) {
    const Rational r = a.next();
    EXPECT_EQ(r, b.next());
    EXPECT_LE(r, Rational(9));
    EXPECT_GE(r, Rational(-9));
    EXPECT_LE(r.denominator(), 9);
  }
}

}  // namespace
}  // namespace hurwitz
