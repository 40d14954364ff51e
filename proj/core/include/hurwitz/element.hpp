#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Thrown when a binary operation receives operands of different dimension,
/// or when a dimension outside {1, 2, 4, 8, 16} is requested.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

bool is_supported_dim(std::size_t dim);

/// Element of one of the Euclidean spaces R^1, R^2, R^4, R^8, R^16, stored as
/// exact coordinates in the standard basis. Index 0 is the unit coordinate,
/// so (a, 0, ..., 0) is the real number a.
class Element {
public:
  /// Zero element of the given dimension.
  explicit Element(std::size_t dim);
  explicit Element(std::vector<Rational> coeffs);
  Element(std::initializer_list<Rational> coeffs);

  static Element zero(std::size_t dim) { return Element(dim); }
  static Element scalar(std::size_t dim, const Rational& a);
  static Element basis(std::size_t dim, std::size_t k);

  std::size_t dim() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  Rational& operator[](std::size_t k) { return coeffs_[k]; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Zero coefficient at index 0, i.e. orthogonal to the real line.
  bool is_imaginary() const { return coeffs_[0].is_zero(); }

  Element real_part() const;
  Element imaginary_part() const;

  /// "(c0, c1, ...)" with each coefficient rendered as "p" or "p/q".
  std::string to_string() const;

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }

  friend bool operator==(const Element&, const Element&) = default;

private:
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Element& x);

/// Throws DimensionError when a.dim() != b.dim().
void require_same_dim(const Element& a, const Element& b, const char* op);

Element add(const Element& a, const Element& b);
Element scale(const Rational& a, const Element& x);
Rational inner(const Element& a, const Element& b);
Rational norm_sq(const Element& x);

/// Property 1 (equality statement) evaluated in squared, all-rational form:
/// ||x + y|| = ||x|| + ||y|| and ||x|| = ||y||. The first condition squares to
/// <x, y> = sqrt(|x|^2 |y|^2), i.e. <x, y> >= 0 and <x, y>^2 = |x|^2 |y|^2.
/// By the triangle inequality this holds iff x = y.
bool equality_statement_holds(const Element& x, const Element& y);

/// Property 2: <x, y> = 0.
bool orthogonal(const Element& x, const Element& y);

}  // namespace hurwitz
