#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

#include "hurwitz/element.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Seeded source of small exact rationals: numerator uniform in [-9, 9],
/// denominator uniform in [1, 9]. Same seed, same sequence.
class RationalSampler {
public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  Rational next();
  Rational next_nonzero();

  Element element(std::size_t dim);
  Element nonzero_element(std::size_t dim);
  /// Coordinate 0 is zero.
  Element imaginary(std::size_t dim);
  Element nonzero_imaginary(std::size_t dim);
  /// Random element supported on the given basis indices only.
  Element supported_on(std::size_t dim, std::span<const std::size_t> indices);

private:
  std::mt19937_64 engine_;
  std::uniform_int_distribution<int> numerator_{-9, 9};
  std::uniform_int_distribution<int> denominator_{1, 9};
};

/// v minus its projections onto each nonzero vector of `against`, which must
/// be pairwise orthogonal. Exact; no normalization.
Element orthogonalize(Element v, std::span<const Element> against);

/// Exact Gram-Schmidt without normalization. Output vectors are pairwise
/// orthogonal and span the same space; dependent inputs become zero.
std::vector<Element> gram_schmidt(std::span<const Element> vectors);

}  // namespace hurwitz
