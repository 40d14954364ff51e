#include "hurwitz/sampling.hpp"

#include <vector>

namespace hurwitz {

Rational RationalSampler::next() {
  const int num = numerator_(engine_);
  const int den = denominator_(engine_);
  return Rational(num, den);
}

Rational RationalSampler::next_nonzero() {
  for (;;) {
    Rational r = next();
    if (!r.is_zero()) return r;
  }
}

Element RationalSampler::element(std::size_t dim) {
  Element x(dim);
  for (std::size_t k = 0; k < dim; ++k) x[k] = next();
  return x;
}

Element RationalSampler::nonzero_element(std::size_t dim) {
  for (;;) {
    Element x = element(dim);
    if (!x.is_zero()) return x;
  }
}

Element RationalSampler::imaginary(std::size_t dim) {
  Element x(dim);
  for (std::size_t k = 1; k < dim; ++k) x[k] = next();
  return x;
}

Element RationalSampler::nonzero_imaginary(std::size_t dim) {
  if (dim < 2) throw DimensionError("no nonzero imaginary elements in dimension 1");
  for (;;) {
    Element x = imaginary(dim);
    if (!x.is_zero()) return x;
  }
}

Element RationalSampler::supported_on(std::size_t dim, std::span<const std::size_t> indices) {
  Element x(dim);
  for (std::size_t k : indices) x[k] = next();
  return x;
}

Element orthogonalize(Element v, std::span<const Element> against) {
  for (const auto& b : against) {
    const Rational bb = norm_sq(b);
    if (bb.is_zero()) continue;
    v -= scale(inner(v, b) / bb, b);
  }
  return v;
}

std::vector<Element> gram_schmidt(std::span<const Element> vectors) {
  std::vector<Element> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(orthogonalize(v, out));
  return out;
}

}  // namespace hurwitz
