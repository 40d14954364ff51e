#include "hurwitz/element.hpp"

#include <ostream>
#include <utility>

namespace hurwitz {

bool is_supported_dim(std::size_t dim) {
  return dim == 1 || dim == 2 || dim == 4 || dim == 8 || dim == 16;
}

namespace {

void require_supported(std::size_t dim) {
  if (!is_supported_dim(dim)) {
    throw DimensionError("unsupported dimension " + std::to_string(dim) +
                         " (expected 1, 2, 4, 8 or 16)");
  }
}

}  // namespace

Element::Element(std::size_t dim) : coeffs_(dim) { require_supported(dim); }

Element::Element(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  require_supported(coeffs_.size());
}

Element::Element(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  require_supported(coeffs_.size());
}

Element Element::scalar(std::size_t dim, const Rational& a) {
  Element x(dim);
  x.coeffs_[0] = a;
  return x;
}

Element Element::basis(std::size_t dim, std::size_t k) {
  Element x(dim);
  if (k >= dim) {
    throw DimensionError("basis index " + std::to_string(k) + " out of range for dimension " +
                         std::to_string(dim));
  }
  x.coeffs_[k] = 1;
  return x;
}

bool Element::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Element Element::real_part() const { return scalar(dim(), coeffs_[0]); }

Element Element::imaginary_part() const {
  Element x = *this;
  x.coeffs_[0] = 0;
  return x;
}

std::string Element::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ", ";
    out += coeffs_[k].to_string();
  }
  out += ")";
  return out;
}

Element Element::operator-() const {
  Element x = *this;
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

Element& Element::operator+=(const Element& rhs) {
  require_same_dim(*this, rhs, "add");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same_dim(*this, rhs, "subtract");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.to_string(); }

void require_same_dim(const Element& a, const Element& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

Element add(const Element& a, const Element& b) { return a + b; }

Element scale(const Rational& a, const Element& x) {
  Element out = x;
  for (std::size_t k = 0; k < out.dim(); ++k) out[k] *= a;
  return out;
}

Rational inner(const Element& a, const Element& b) {
  require_same_dim(a, b, "inner");
  Rational sum;
  for (std::size_t k = 0; k < a.dim(); ++k) sum += a[k] * b[k];
  return sum;
}

Rational norm_sq(const Element& x) { return inner(x, x); }

bool equality_statement_holds(const Element& x, const Element& y) {
  require_same_dim(x, y, "equality_statement_holds");
  const Rational nx = norm_sq(x);
  const Rational ny = norm_sq(y);
  const Rational xy = inner(x, y);
  return nx == ny && xy.sign() >= 0 && xy * xy == nx * ny;
}

bool orthogonal(const Element& x, const Element& y) {
  require_same_dim(x, y, "orthogonal");
  return inner(x, y).is_zero();
}

}  // namespace hurwitz
