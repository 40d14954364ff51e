#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/element.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/table.hpp"

namespace hurwitz {

/// Structured failure (or finding) payload: index tuple plus named values
/// rendered as exact strings.
struct Counterexample {
  std::string description;
  std::vector<std::size_t> indices;
  std::vector<std::pair<std::string, std::string>> values;

  /// Value lookup by name; empty string when absent.
  std::string value(const std::string& name) const;
};

struct VerificationReport {
  std::string subject;
  bool passed = true;
  /// Hypotheses cannot be met in this dimension; nothing was checked.
  bool skipped = false;
  std::size_t checked_count = 0;
  std::vector<Counterexample> counterexamples;
  /// Supporting facts that are not failures, e.g. the inconsistent linear
  /// system proving that no unit exists.
  std::vector<Counterexample> evidence;
  std::string runtime_note;

  void add(Counterexample c) { counterexamples.push_back(std::move(c)); }
  /// Sorts counterexamples by index tuple and sets passed = counterexamples.empty().
  void finalize();
};

/// Exhaustive sweep of the sum-of-squares coefficient conditions
///   sum_m c_{jk}^m c_{j'k'}^m + c_{j'k}^m c_{jk'}^m = 2 d_{jj'} d_{kk'}
/// over all dim^4 index quadruples; each violated (j, k, j', k') is reported.
VerificationReport verify_composition(const StructureTable& t);

/// norm_sq(xy) = norm_sq(x) norm_sq(y) on seeded random rational pairs.
VerificationReport verify_composition_sampled(const StructureTable& t, std::size_t trials,
                                              std::uint64_t seed);

/// norm_sq(xy) - norm_sq(x) norm_sq(y) expanded as a polynomial in
/// x_0..x_{n-1}, y_0..y_{n-1} (variables 0..n-1 and n..2n-1).
Polynomial composition_defect(const StructureTable& t);

struct LawClassification {
  std::size_t dim = 0;
  bool commutative = true;
  bool associative = true;
  bool has_unit = true;
  bool composition = true;
  std::size_t checked_count = 0;
  /// Keyed by "commutative", "associative", "unit", "composition"; present
  /// exactly for the laws that fail.
  std::map<std::string, Counterexample> witnesses;
};

/// Exhaustive over basis pairs (commutativity) and triples (associativity);
/// unit by row/column inspection; composition via verify_composition.
LawClassification classify_laws(const StructureTable& t);

/// Every (e_a + s e_b)(e_c + t e_d) = 0 with 1 <= a < b, 1 <= c < d and
/// s, t in {+1, -1}. Each hit is reported as a counterexample to the
/// absence of zero divisors.
VerificationReport find_zero_divisors(const StructureTable& t);

/// The product (uv + ws)(sv + wu) evaluated in the 16-dimensional table,
/// term by term.
struct WitnessProduct {
  Element left;
  Element right;
  Element product;
  Rational left_norm_sq;
  Rational right_norm_sq;
  Rational product_norm_sq;
  /// (symbolic term, value in the table) for each of the four terms.
  std::vector<std::pair<std::string, std::string>> terms;
};

WitnessProduct sedenion_witness();

/// Proposition checks P1..P7 for dims 2, 4, ... up to max_dim (2, 4 or 8)
/// with `trials` random exact trials each. One report per proposition per
/// dimension; unsatisfiable hypotheses yield skipped reports.
std::vector<VerificationReport> run_proposition_suite(std::size_t max_dim, std::size_t trials,
                                                      std::uint64_t seed);

/// Imaginary basis products e_j e_k (j, k >= 1) derived by fixpoint
/// propagation of anticommutativity, (xy)x = x(yx) = y, (xy)(yz) = xz and
/// x(yg) = -(xy)g, starting only from the unit, imaginary squares and the
/// naming e_j g = e_{j+g}. Independent of build_table.
struct DerivedTable {
  std::size_t dim = 0;
  std::vector<std::optional<SignedBasisRef>> entries;  // row-major
  std::vector<std::string> conflicts;

  const std::optional<SignedBasisRef>& at(std::size_t j, std::size_t k) const {
    return entries[j * dim + k];
  }
};

DerivedTable derive_table_from_propositions(std::size_t dim);

/// Compares derive_table_from_propositions(t.dim()) with t entry for entry.
VerificationReport cross_check_derivation(const StructureTable& t);

/// norm_sq(x ♥ y) - norm_sq(x) norm_sq(y) expanded symbolically; passes when
/// the defect polynomial is zero.
VerificationReport verify_heart_composition();
VerificationReport heart_composition_sampled(std::size_t trials, std::uint64_t seed);
VerificationReport heart_commutativity(std::size_t trials, std::uint64_t seed);

/// Solves e ♥ x = x ♥ e = x for x in the basis. Passes when the system is
/// inconsistent, i.e. no two-sided unit exists; the contradiction is
/// attached as evidence.
VerificationReport heart_unit_search();

/// Unit search, symbolic composition, sampled composition, commutativity.
std::vector<VerificationReport> run_heart_checks(std::size_t trials, std::uint64_t seed);

}  // namespace hurwitz
