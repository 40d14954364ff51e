#include "hurwitz/table.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace hurwitz {

std::string_view rule_tag(Rule rule) {
  switch (rule) {
    case Rule::Unit: return "R0";
    case Rule::Square: return "R1";
    case Rule::LowerLevel: return "R2";
    case Rule::GeneratorNaming: return "R3";
    case Rule::AntiAssociativity: return "R4";
    case Rule::CrossProduct: return "R5";
    case Rule::GeneratorCancellation: return "R6";
  }
  return "?";
}

StructureTable::StructureTable(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), entries_(dim * dim), rules_(dim * dim, Rule::Unit) {
  if (!is_supported_dim(dim)) {
    throw DimensionError("unsupported table dimension " + std::to_string(dim));
  }
  if (labels_.size() != dim) throw DimensionError("label count does not match dimension");
}

std::string StructureTable::signed_label(const SignedBasisRef& ref) const {
  return (ref.sign < 0 ? "-" : "") + labels_[ref.index];
}

void StructureTable::set(std::size_t j, std::size_t k, SignedBasisRef value, Rule rule) {
  entries_[j * dim_ + k] = value;
  rules_[j * dim_ + k] = rule;
}

StructureTable StructureTable::restricted(std::size_t n) const {
  if (n > dim_) throw DimensionError("cannot restrict a table to a larger dimension");
  StructureTable out(n, std::vector<std::string>(labels_.begin(), labels_.begin() + n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (at(j, k).index >= n) {
        throw DimensionError("leading block of size " + std::to_string(n) +
                             " is not closed under multiplication");
      }
      out.set(j, k, at(j, k), rule(j, k));
    }
  }
  return out;
}

bool StructureTable::same_products(const StructureTable& other) const {
  return dim_ == other.dim_ && entries_ == other.entries_;
}

namespace {

const char* generator_name(std::size_t dim) {
  switch (dim) {
    case 2: return "u";
    case 4: return "v";
    case 8: return "w";
    default: return "s";
  }
}

std::string doubled_label(const std::string& base, const char* gen) {
  if (base == "1") return gen;
  if (base.size() == 1) return base + gen;
  return "(" + base + ")" + gen;
}

}  // namespace

StructureTable build_table(std::size_t dim) {
  if (!is_supported_dim(dim)) {
    throw DimensionError("unsupported table dimension " + std::to_string(dim) +
                         " (expected 1, 2, 4, 8 or 16)");
  }
  if (dim == 1) {
    StructureTable t(1, {"1"});
    t.set(0, 0, {1, 0}, Rule::Unit);
    return t;
  }

  const StructureTable half = build_table(dim / 2);
  const std::size_t g = dim / 2;

  std::vector<std::string> labels = half.labels();
  for (std::size_t k = 0; k < g; ++k) labels.push_back(doubled_label(half.label(k), generator_name(dim)));

  StructureTable t(dim, std::move(labels));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      if (j == 0 || k == 0) {
        t.set(j, k, {1, j + k}, Rule::Unit);
      } else if (j == k) {
        t.set(j, k, {-1, 0}, Rule::Square);
      } else if (j < g && k < g) {
        t.set(j, k, half.at(j, k), Rule::LowerLevel);
      } else if (j < g && k == g) {
        t.set(j, k, {1, j + g}, Rule::GeneratorNaming);
      } else if (j == g && k < g) {
        t.set(j, k, {-1, k + g}, Rule::GeneratorNaming);
      } else if (j == g) {
        // g (qg) = q
        t.set(j, k, {1, k - g}, Rule::GeneratorCancellation);
      } else if (k == g) {
        // (qg) g = -q
        t.set(j, k, {-1, j - g}, Rule::GeneratorCancellation);
      } else if (j < g) {
        // p (qg)
        const std::size_t p = j;
        const std::size_t q = k - g;
        if (p == q) {
          t.set(j, k, {-1, g}, Rule::GeneratorCancellation);
        } else {
          const auto pq = half.at(p, q);
          t.set(j, k, {-pq.sign, pq.index + g}, Rule::AntiAssociativity);
        }
      } else if (k < g) {
        // (pg) q
        const std::size_t p = j - g;
        const std::size_t q = k;
        if (p == q) {
          t.set(j, k, {1, g}, Rule::GeneratorCancellation);
        } else {
          const auto qp = half.at(q, p);
          t.set(j, k, {qp.sign, qp.index + g}, Rule::AntiAssociativity);
        }
      } else {
        // (pg)(qg), p != q
        const auto pq = half.at(j - g, k - g);
        t.set(j, k, {-pq.sign, pq.index}, Rule::CrossProduct);
      }
    }
  }
  return t;
}

std::string check_table_invariants(const StructureTable& t) {
  const std::size_t n = t.dim();
  auto name = [&](std::size_t j, std::size_t k) {
    return "(" + std::to_string(j) + ", " + std::to_string(k) + ")";
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (t.at(0, k) != SignedBasisRef{1, k} || t.at(k, 0) != SignedBasisRef{1, k}) {
      return "unit law fails at index " + std::to_string(k);
    }
    if (k >= 1 && t.at(k, k) != SignedBasisRef{-1, 0}) {
      return "imaginary square fails at " + name(k, k);
    }
  }
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t k = 1; k < n; ++k) {
      if (j == k) continue;
      const auto a = t.at(j, k);
      const auto b = t.at(k, j);
      if (a.index != b.index || a.sign != -b.sign) return "anticommutativity fails at " + name(j, k);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> row_seen(n, false);
    std::vector<bool> col_seen(n, false);
    for (std::size_t k = 0; k < n; ++k) {
      const auto r = t.at(j, k);
      const auto c = t.at(k, j);
      if (std::abs(r.sign) != 1 || std::abs(c.sign) != 1) return "sign not +-1 near " + name(j, k);
      if (row_seen[r.index]) return "row " + std::to_string(j) + " is not a signed permutation";
      if (col_seen[c.index]) return "column " + std::to_string(j) + " is not a signed permutation";
      row_seen[r.index] = true;
      col_seen[c.index] = true;
    }
  }
  return {};
}

Element heart_multiply(const Element& x, const Element& y) {
  if (x.dim() != 2 || y.dim() != 2) {
    throw DimensionError("heart product is defined on dimension 2 only");
  }
  auto [first, second] = heart_formula(x[0], x[1], y[0], y[1]);
  return Element{std::move(first), std::move(second)};
}

std::string render_table_text(const StructureTable& t) {
  const std::size_t n = t.dim();
  std::vector<std::size_t> width(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      width[k] = std::max(width[k], t.signed_label(t.at(j, k)).size());
    }
  }
  std::ostringstream out;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::string cell = t.signed_label(t.at(j, k));
      if (k) out << "  ";
      out << std::string(width[k] - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hurwitz
