#include <gtest/gtest.h>

#include <algorithm>

#include "hurwitz/algebra.hpp"
#include "hurwitz/verifier.hpp"

namespace hurwitz {
namespace {

TEST(PropositionSuite, AllPassOrSkipUpToOctonions) {
  const auto reports = run_proposition_suite(8, 200, 3);
  ASSERT_EQ(reports.size(), 21u);  // 7 propositions x 3 dims
  std::size_t skipped = 0;
  for (const auto& r : reports) {
    EXPECT_TRUE(r.passed) << r.subject;
    EXPECT_TRUE(r.counterexamples.empty());
    if (r.skipped) {
      ++skipped;
      EXPECT_EQ(r.checked_count, 0u);
      EXPECT_NE(r.runtime_note.find("skipped"), std::string::npos);
    } else {
      EXPECT_GE(r.checked_count, 200u) << r.subject;
    }
  }
  // dim 2: P2, P3, P4, P6, P7; dim 4: P6, P7.
  EXPECT_EQ(skipped, 7u);
}

TEST(PropositionSuite, DeterministicUnderSeed) {
  const auto a = run_proposition_suite(4, 50, 17);
  const auto b = run_proposition_suite(4, 50, 17);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].subject, b[i].subject);
    EXPECT_EQ(a[i].checked_count, b[i].checked_count);
    EXPECT_EQ(a[i].passed, b[i].passed);
  }
}

TEST(PropositionSuite, RejectsUnsupportedMaxDim) {
  EXPECT_THROW(run_proposition_suite(16, 10, 0), DimensionError);
  EXPECT_THROW(run_proposition_suite(1, 10, 0), DimensionError);
}

TEST(PropositionExamples, ImaginarySquare) {
  const Element u{0, 3};
  EXPECT_EQ(multiply(u, u, build_table(2)), (Element{-9, 0}));
}

TEST(PropositionExamples, FlexibleIdentityOnBasis) {
  const StructureTable t = build_table(4);
  const Element x = Element::basis(4, 1), y = Element::basis(4, 2);
  EXPECT_EQ(multiply(multiply(x, y, t), x, t), y);
  EXPECT_EQ(multiply(x, multiply(y, x, t), t), y);
}

TEST(PropositionExamples, AntiAssociativityOnBasis) {
  const StructureTable t = build_table(8);
  const Element u = Element::basis(8, 1), v = Element::basis(8, 2), w = Element::basis(8, 4);
  const Element lhs = multiply(u, multiply(v, w, t), t);
  EXPECT_EQ(lhs, -Element::basis(8, 7));
  EXPECT_EQ(lhs, -multiply(multiply(u, v, t), w, t));
}

TEST(PropositionExamples, AntiAssociativityFailsWhenOneFactorIsTheUnit) {
  // The identity needs imaginary x, y: 1(uw) = uw, not -uw.
  const StructureTable t = build_table(8);
  const Element one = Element::basis(8, 0), u = Element::basis(8, 1), w = Element::basis(8, 4);
  EXPECT_NE(multiply(one, multiply(u, w, t), t), -multiply(multiply(one, u, t), w, t));
}

class DerivationDims : public ::testing::TestWithParam<std::size_t> {};

TEST_P(DerivationDims, PropositionsReproduceTable) {
  const StructureTable t = build_table(GetParam());
  const DerivedTable d = derive_table_from_propositions(t.dim());
  EXPECT_TRUE(d.conflicts.empty());
  for (std::size_t j = 0; j < t.dim(); ++j) {
    for (std::size_t k = 0; k < t.dim(); ++k) {
      ASSERT_TRUE(d.at(j, k).has_value()) << j << "," << k;
      EXPECT_EQ(*d.at(j, k), t.at(j, k)) << j << "," << k;
    }
  }
  EXPECT_TRUE(cross_check_derivation(t).passed);
}

TEST(Derivation, PropositionsContradictEachOtherInDim16) {
  // Applied formally beyond the octonions, (xy)(yz) = xz clashes with
  // products forced by the other identities.
  const DerivedTable d = derive_table_from_propositions(16);
  EXPECT_FALSE(d.conflicts.empty());
  EXPECT_FALSE(cross_check_derivation(build_table(16)).passed);
}

INSTANTIATE_TEST_SUITE_P(UpToOctonions, DerivationDims, ::testing::Values(1, 2, 4, 8));

}  // namespace
}  // namespace hurwitz
