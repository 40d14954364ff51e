#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// One equation sum_i coeffs[i] * t_i = rhs.
struct LinearEquation {
  std::vector<Rational> coeffs;
  Rational rhs;

  /// e.g. "1*t0 + -1*t1 = 0" with the given variable names.
  std::string to_string(const std::vector<std::string>& names) const;
};

struct LinearSolveResult {
  bool consistent = false;
  /// One particular solution (free variables set to 0) when consistent.
  std::vector<Rational> solution;
  std::size_t rank = 0;
  /// When inconsistent: the reduced equation 0 = c (c != 0), plus the
  /// multipliers expressing it as a combination of the input equations.
  std::optional<LinearEquation> contradiction;
  std::vector<Rational> contradiction_combination;
};

/// Exact Gauss-Jordan elimination over the rationals.
LinearSolveResult solve_linear_system(const std::vector<LinearEquation>& equations,
                                      std::size_t num_vars);

}  // namespace hurwitz
