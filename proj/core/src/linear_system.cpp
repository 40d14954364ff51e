#include "hurwitz/linear_system.hpp"

#include <stdexcept>
#include <utility>

namespace hurwitz {

std::string LinearEquation::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string name = i < names.size() ? names[i] : "t" + std::to_string(i);
    out += coeffs[i].to_string() + "*" + name;
  }
  if (out.empty()) out = "0";
  return out + " = " + rhs.to_string();
}

LinearSolveResult solve_linear_system(const std::vector<LinearEquation>& equations,
                                      std::size_t num_vars) {
  const std::size_t rows = equations.size();
  // Augmented matrix [A | b | I] so contradictions can be traced back to the
  // input equations.
  const std::size_t width = num_vars + 1 + rows;
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(width));
  for (std::size_t r = 0; r < rows; ++r) {
    if (equations[r].coeffs.size() != num_vars) {
      throw std::invalid_argument("equation has the wrong number of coefficients");
    }
    for (std::size_t c = 0; c < num_vars; ++c) m[r][c] = equations[r].coeffs[c];
    m[r][num_vars] = equations[r].rhs;
    m[r][num_vars + 1 + r] = 1;
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < num_vars && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    const Rational lead = m[row][col];
    for (auto& v : m[row]) v /= lead;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < width; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }

  LinearSolveResult result;
  result.rank = row;
  for (std::size_t r = row; r < rows; ++r) {
    if (!m[r][num_vars].is_zero()) {
      result.consistent = false;
      result.contradiction = LinearEquation{std::vector<Rational>(num_vars), m[r][num_vars]};
      result.contradiction_combination.assign(m[r].begin() + static_cast<long>(num_vars) + 1, m[r].end());
      return result;
    }
  }
  result.consistent = true;
  result.solution.assign(num_vars, Rational());
  for (std::size_t r = 0; r < pivot_col.size(); ++r) result.solution[pivot_col[r]] = m[r][num_vars];
  return result;
}

}  // namespace hurwitz
