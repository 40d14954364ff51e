#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/element.hpp"

namespace hurwitz {

/// Product of two basis elements: sign * e_index.
struct SignedBasisRef {
  int sign = 1;
  std::size_t index = 0;

  friend bool operator==(const SignedBasisRef&, const SignedBasisRef&) = default;
};

/// Rule that produced a table entry. Earlier rules take priority; the
/// generator g is the newest basis vector (u, v, w, s at dims 2, 4, 8, 16)
/// and p, q are imaginary basis vectors of the half-size level.
enum class Rule {
  Unit,                   ///< R0: 1x = x1 = x
  Square,                 ///< R1: e_k e_k = -1, k >= 1
  LowerLevel,             ///< R2: both factors from the half-size table
  GeneratorNaming,        ///< R3: p g = (pg), g p = -(pg)
  AntiAssociativity,      ///< R4: p (qg) = -(pq) g, (qg) p = (pq) g, p != q
  CrossProduct,           ///< R5: (pg)(qg) = -(pq), p != q
  GeneratorCancellation,  ///< R6: g (qg) = q, (qg) g = -q, p (pg) = -g, (pg) p = g
};

/// "R0" .. "R6".
std::string_view rule_tag(Rule rule);

/// Multiplication table of a bilinear product on R^dim whose basis products
/// are all signed basis elements.
class StructureTable {
public:
  StructureTable(std::size_t dim, std::vector<std::string> labels);

  std::size_t dim() const { return dim_; }

  const SignedBasisRef& at(std::size_t j, std::size_t k) const { return entries_[j * dim_ + k]; }
  Rule rule(std::size_t j, std::size_t k) const { return rules_[j * dim_ + k]; }
  const std::string& label(std::size_t k) const { return labels_[k]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Structure constant c_{jk}^m in {-1, 0, 1}.
  int coefficient(std::size_t j, std::size_t k, std::size_t m) const {
    const auto& e = at(j, k);
    return e.index == m ? e.sign : 0;
  }

  /// Label with sign, e.g. "-uv".
  std::string signed_label(const SignedBasisRef& ref) const;

  void set(std::size_t j, std::size_t k, SignedBasisRef value, Rule rule);

  /// Leading n x n block. n must be a supported dimension <= dim().
  StructureTable restricted(std::size_t n) const;

  /// Compares products only; provenance is ignored.
  bool same_products(const StructureTable& other) const;

private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<SignedBasisRef> entries_;
  std::vector<Rule> rules_;
};

/// Builds the table for dim in {1, 2, 4, 8, 16} by repeated doubling.
/// Basis order: 1, u, v, uv, w, uw, vw, (uv)w, s, us, ..., ((uv)w)s, with
/// e_{k + dim/2} = e_k * g for the newest generator g. Throws DimensionError
/// for any other dim.
StructureTable build_table(std::size_t dim);

/// Checks the structural invariants: unit row/column, imaginary squares,
/// anticommutativity of distinct imaginary basis vectors, and that every row
/// and column is a signed permutation. Returns a description of the first
/// violation, or an empty string.
std::string check_table_invariants(const StructureTable& t);

/// (a, b) ♥ (c, d) = (ad + bc, ac - bd) over any commutative ring T.
template <class T>
std::array<T, 2> heart_formula(const T& a, const T& b, const T& c, const T& d) {
  return {a * d + b * c, a * c - b * d};
}

/// The unit-free commutative product on R^2. Throws DimensionError unless
/// both operands have dim 2.
Element heart_multiply(const Element& x, const Element& y);

/// Aligned grid, two-space column separator, signed labels.
std::string render_table_text(const StructureTable& t);

/// JSON object {dim, labels, entries: [{sign, index, rule}, ...]} in
/// row-major order.
std::string render_table_machine(const StructureTable& t);

}  // namespace hurwitz
