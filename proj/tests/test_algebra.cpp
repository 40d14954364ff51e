#include <gtest/gtest.h>

#include <stdexcept>

#include "hurwitz/algebra.hpp"
#include "hurwitz/sampling.hpp"
#include "oracles.hpp"

namespace hurwitz {
namespace {

TEST(Multiply, ComplexExample) {
  // (1 + 2u)(3 + 4u) = (3 - 8) + (4 + 6)u
  EXPECT_EQ(multiply(Element{1, 2}, Element{3, 4}, build_table(2)), (Element{-5, 10}));
}

TEST(Multiply, QuaternionBasis) {
  const StructureTable t = build_table(4);
  EXPECT_EQ(multiply(Element::basis(4, 1), Element::basis(4, 2), t), Element::basis(4, 3));
}

TEST(Multiply, SedenionWitnessVanishes) {
  const StructureTable t = build_table(16);
  const Element x = Element::basis(16, 3) + Element::basis(16, 12);
  const Element y = -Element::basis(16, 10) - Element::basis(16, 5);
  EXPECT_TRUE(multiply(x, y, t).is_zero());
  EXPECT_EQ(norm_sq(x), Rational(2));
  EXPECT_EQ(norm_sq(y), Rational(2));
}

TEST(Multiply, DimensionMismatch) {
  EXPECT_THROW(multiply(Element{1, 0}, Element{1, 0, 0, 0}, build_table(4)), DimensionError);
  EXPECT_THROW(multiply(Element{1, 0}, Element{1, 0}, build_table(4)), DimensionError);
}

class AlgebraDims : public ::testing::TestWithParam<std::size_t> {};

TEST_P(AlgebraDims, UnitLaw) {
  const std::size_t n = GetParam();
  const StructureTable t = build_table(n);
  const Element one = Element::scalar(n, 1);
  RationalSampler s(n);
  for (int i = 0; i < 100; ++i) {
    const Element x = s.element(n);
    EXPECT_EQ(multiply(one, x, t), x);
    EXPECT_EQ(multiply(x, one, t), x);
  }
}

TEST_P(AlgebraDims, Bilinear) {
  const std::size_t n = GetParam();
  const StructureTable t = build_table(n);
  RationalSampler s(100 + n);
  for (int i = 0; i < 100; ++i) {
    const Element x = s.element(n), x2 = s.element(n), y = s.element(n);
    const Rational a = s.next();
    EXPECT_EQ(multiply(x + x2, y, t), multiply(x, y, t) + multiply(x2, y, t));
    EXPECT_EQ(multiply(y, x + x2, t), multiply(y, x, t) + multiply(y, x2, t));
    // Scalars as vectors: a(xy) = (ax)y = x(ay).
    EXPECT_EQ(scale(a, multiply(x, y, t)), multiply(scale(a, x), y, t));
    EXPECT_EQ(scale(a, multiply(x, y, t)), multiply(x, scale(a, y), t));
  }
}

INSTANTIATE_TEST_SUITE_P(AllDims, AlgebraDims, ::testing::Values(1, 2, 4, 8, 16));

class DivisionDims : public ::testing::TestWithParam<std::size_t> {};

TEST_P(DivisionDims, NormIsMultiplicative) {
  const std::size_t n = GetParam();
  const StructureTable t = build_table(n);
  RationalSampler s(200 + n);
  for (int i = 0; i < 1000; ++i) {
    const Element x = s.element(n), y = s.element(n);
    EXPECT_EQ(norm_sq(multiply(x, y, t)), norm_sq(x) * norm_sq(y));
  }
}

TEST_P(DivisionDims, ConjugateGivesNorm) {
  const std::size_t n = GetParam();
  const StructureTable t = build_table(n);
  RationalSampler s(300 + n);
  for (int i = 0; i < 100; ++i) {
    const Element x = s.element(n);
    EXPECT_EQ(multiply(x, conjugate(x), t), Element::scalar(n, norm_sq(x)));
  }
}

TEST_P(DivisionDims, InverseIsTwoSided) {
  const std::size_t n = GetParam();
  const StructureTable t = build_table(n);
  const Element one = Element::scalar(n, 1);
  RationalSampler s(400 + n);
  for (int i = 0; i < 100; ++i) {
    const Element x = s.nonzero_element(n);
    const Element inv = inverse(x, t);
    EXPECT_EQ(multiply(x, inv, t), one);
    EXPECT_EQ(multiply(inv, x, t), one);
  }
}

TEST_P(DivisionDims, NoZeroProductsFromNonzeroFactors) {
  const std::size_t n = GetParam();
  const StructureTable t = build_table(n);
  RationalSampler s(500 + n);
  for (int i = 0; i < 1000; ++i) {
    const Element x = s.element(n), y = s.element(n);
    if (multiply(x, y, t).is_zero()) {
      EXPECT_TRUE(x.is_zero() || y.is_zero()) << x << " * " << y;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(UpToOctonions, DivisionDims, ::testing::Values(1, 2, 4, 8));

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Element{1}), (Element{1}));
  EXPECT_EQ(conjugate(Element::basis(4, 1)), -Element::basis(4, 1));
  EXPECT_EQ(multiply(Element{1, 2, 3, 4}, conjugate(Element{1, 2, 3, 4}), build_table(4)),
            (Element{30, 0, 0, 0}));
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(Element{1}, build_table(1)), (Element{1}));
  EXPECT_EQ(inverse(Element{0, 1}, build_table(2)), (Element{0, -1}));
  EXPECT_EQ(inverse(Element{0, 2}, build_table(2)), (Element{0, Rational(-1, 2)}));
}

TEST(Inverse, Errors) {
  EXPECT_THROW(inverse(Element::zero(4), build_table(4)), std::domain_error);
  EXPECT_THROW(inverse(Element::scalar(16, 1), build_table(16)), std::domain_error);
  EXPECT_THROW(inverse(Element{1, 0}, build_table(4)), DimensionError);
}

TEST(Rotate, Identity) {
  const Vector3 v{1, 2, 3};
  EXPECT_EQ(rotate(Element{1, 0, 0, 0}, v), v);
}

TEST(Rotate, HalfTurnAboutX) {
  EXPECT_EQ(rotate(Element{0, 1, 0, 0}, Vector3{0, 1, 0}), (Vector3{0, -1, 0}));
  EXPECT_EQ(oracle::rotation_matrix_apply(Element{0, 1, 0, 0}, Vector3{0, 1, 0}), (Vector3{0, -1, 0}));
}

TEST(Rotate, QuarterTurnAboutX) {
  // q = 1 + i (unnormalized). With q v q^-1 the z axis goes to -y; the
  // independent rotation-matrix oracle agrees.
  const Element q{1, 1, 0, 0};
  EXPECT_EQ(oracle::rotation_matrix_apply(q, Vector3{0, 0, 1}), (Vector3{0, -1, 0}));
  EXPECT_EQ(rotate(q, Vector3{0, 0, 1}), (Vector3{0, -1, 0}));
  EXPECT_EQ(rotate(q, Vector3{0, 1, 0}), (Vector3{0, 0, 1}));
}

TEST(Rotate, Errors) {
  EXPECT_THROW(rotate(Element::zero(4), Vector3{1, 0, 0}), std::domain_error);
  EXPECT_THROW(rotate(Element{1, 0}, Vector3{1, 0, 0}), DimensionError);
}

TEST(Rotate, Properties) {
  RationalSampler s(77);
  for (int i = 0; i < 100; ++i) {
    const Element q = s.nonzero_element(4);
    const Vector3 v{s.next(), s.next(), s.next()};
    const Vector3 r = rotate(q, v);
    EXPECT_EQ(norm_sq(r), norm_sq(v));
    EXPECT_EQ(r, oracle::rotation_matrix_apply(q, v));
    const Rational lambda = s.next_nonzero();
    EXPECT_EQ(rotate(scale(lambda, q), v), r);
    const Vector3 axis{q[1], q[2], q[3]};
    EXPECT_EQ(rotate(q, axis), axis);
  }
}

}  // namespace
}  // namespace hurwitz
