#include "hurwitz/algebra.hpp"

#include <ostream>
#include <stdexcept>

namespace hurwitz {

Element multiply(const Element& a, const Element& b, const StructureTable& t) {
  require_same_dim(a, b, "multiply");
  if (a.dim() != t.dim()) {
    throw DimensionError("multiply: element dimension " + std::to_string(a.dim()) +
                         " does not match table dimension " + std::to_string(t.dim()));
  }
  const std::size_t n = t.dim();
  Element out(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (b[k].is_zero()) continue;
      const auto& e = t.at(j, k);
      const Rational term = a[j] * b[k];
      if (e.sign > 0) {
        out[e.index] += term;
      } else {
        out[e.index] -= term;
      }
    }
  }
  return out;
}

Element conjugate(const Element& x) {
  Element out = -x;
  out[0] = x[0];
  return out;
}

Element inverse(const Element& x, const StructureTable& t) {
  if (x.dim() != t.dim()) throw DimensionError("inverse: element and table dimensions differ");
  if (t.dim() > 8) {
    throw std::domain_error("inverse is not defined for the 16-dimensional table");
  }
  const Rational n = norm_sq(x);
  if (n.is_zero()) throw std::domain_error("inverse of the zero element");
  return scale(Rational(1) / n, conjugate(x));
}

std::string to_string(const Vector3& v) {
  return v.x.to_string() + ", " + v.y.to_string() + ", " + v.z.to_string();
}

std::ostream& operator<<(std::ostream& os, const Vector3& v) { return os << to_string(v); }

Rational norm_sq(const Vector3& v) { return v.x * v.x + v.y * v.y + v.z * v.z; }

Vector3 rotate(const Element& q, const Vector3& v) {
  if (q.dim() != 4) throw DimensionError("rotate: quaternion must have dimension 4");
  if (q.is_zero()) throw std::domain_error("rotate: zero quaternion");
  static const StructureTable quaternions = build_table(4);
  const Element embedded{0, v.x, v.y, v.z};
  const Element r = multiply(multiply(q, embedded, quaternions), inverse(q, quaternions), quaternions);
  return {r[1], r[2], r[3]};
}

}  // namespace hurwitz
