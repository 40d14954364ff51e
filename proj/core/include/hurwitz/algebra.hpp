#pragma once

#include <iosfwd>
#include <string>

#include "hurwitz/element.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/table.hpp"

namespace hurwitz {

/// Bilinear product sum_{j,k} a_j b_k (e_j e_k) using the table's structure
/// constants. Throws DimensionError unless a, b and t share a dimension.
Element multiply(const Element& a, const Element& b, const StructureTable& t);

/// Keeps coordinate 0 and negates the rest.
Element conjugate(const Element& x);

/// conj(x) / |x|^2. Throws std::domain_error for x = 0 or a 16-dimensional
/// table, where zero divisors exist and inverses are not guaranteed.
Element inverse(const Element& x, const StructureTable& t);

struct Vector3 {
  Rational x;
  Rational y;
  Rational z;

  friend bool operator==(const Vector3&, const Vector3&) = default;
};

std::string to_string(const Vector3& v);
std::ostream& operator<<(std::ostream& os, const Vector3& v);

Rational norm_sq(const Vector3& v);

/// Imaginary part of q v q^-1 with v embedded as (0, x, y, z), computed in
/// the quaternion table. q need not be normalized: the result is invariant
/// under q -> lambda q. Throws DimensionError unless q.dim() == 4 and
/// std::domain_error for q = 0.
Vector3 rotate(const Element& q, const Vector3& v);

}  // namespace hurwitz
