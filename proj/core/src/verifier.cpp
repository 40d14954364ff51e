#include "hurwitz/verifier.hpp"

#include <algorithm>
#include <array>

#include "hurwitz/algebra.hpp"
#include "hurwitz/linear_system.hpp"
#include "hurwitz/sampling.hpp"

namespace hurwitz {

std::string Counterexample::value(const std::string& name) const {
  for (const auto& [k, v] : values) {
    if (k == name) return v;
  }
  return {};
}

void VerificationReport::finalize() {
  std::stable_sort(counterexamples.begin(), counterexamples.end(),
                   [](const Counterexample& a, const Counterexample& b) { return a.indices < b.indices; });
  passed = counterexamples.empty();
}

namespace {

std::string dim_subject(const char* what, std::size_t dim) {
  return std::string(what) + " dim=" + std::to_string(dim);
}

/// Signed label sum of an element whose coefficients are small integers,
/// e.g. "uv + ws" or "-us"; falls back to coordinates otherwise.
std::string describe(const Element& x, const StructureTable& t) {
  std::string out;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    const Rational& c = x[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
    out += t.label(k);
  }
  return out.empty() ? "0" : out;
}

/// sign * e_m times e_k, at the basis level.
SignedBasisRef times(const StructureTable& t, SignedBasisRef lhs, std::size_t k) {
  SignedBasisRef r = t.at(lhs.index, k);
  r.sign *= lhs.sign;
  return r;
}

SignedBasisRef times(const StructureTable& t, std::size_t j, SignedBasisRef rhs) {
  SignedBasisRef r = t.at(j, rhs.index);
  r.sign *= rhs.sign;
  return r;
}

}  // namespace

VerificationReport verify_composition(const StructureTable& t) {
  VerificationReport report;
  report.subject = dim_subject("composition", t.dim());
  const std::size_t n = t.dim();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j2 = 0; j2 < n; ++j2) {
        for (std::size_t k2 = 0; k2 < n; ++k2) {
          long lhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += t.coefficient(j, k, m) * t.coefficient(j2, k2, m) +
                   t.coefficient(j2, k, m) * t.coefficient(j, k2, m);
          }
          const long expected = (j == j2 && k == k2) ? 2 : 0;
          ++report.checked_count;
          if (lhs != expected) {
            report.add({"coefficient condition violated", {j, k, j2, k2},
                        {{"lhs", std::to_string(lhs)}, {"expected", std::to_string(expected)}}});
          }
        }
      }
    }
  }
  report.finalize();
  report.runtime_note = std::to_string(report.checked_count) + " conditions checked, " +
                        std::to_string(report.counterexamples.size()) + " violated";
  return report;
}

VerificationReport verify_composition_sampled(const StructureTable& t, std::size_t trials,
                                              std::uint64_t seed) {
  VerificationReport report;
  report.subject = dim_subject("composition (sampled)", t.dim());
  RationalSampler sampler(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const Element x = sampler.element(t.dim());
    const Element y = sampler.element(t.dim());
    const Rational lhs = norm_sq(multiply(x, y, t));
    const Rational rhs = norm_sq(x) * norm_sq(y);
    ++report.checked_count;
    if (lhs != rhs) {
      report.add({"norm_sq(xy) != norm_sq(x) norm_sq(y)", {i},
                  {{"x", x.to_string()}, {"y", y.to_string()},
                   {"norm_sq(xy)", lhs.to_string()}, {"norm_sq(x)norm_sq(y)", rhs.to_string()}}});
    }
  }
  report.finalize();
  return report;
}

Polynomial composition_defect(const StructureTable& t) {
  const std::size_t n = t.dim();
  const std::size_t vars = 2 * n;
  std::vector<Polynomial> x;
  std::vector<Polynomial> y;
  for (std::size_t i = 0; i < n; ++i) {
    x.push_back(Polynomial::variable(vars, i));
    y.push_back(Polynomial::variable(vars, n + i));
  }
  std::vector<Polynomial> product(n, Polynomial(vars));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& e = t.at(j, k);
      const Polynomial term = x[j] * y[k];
      if (e.sign > 0) {
        product[e.index] += term;
      } else {
        product[e.index] -= term;
      }
    }
  }
  Polynomial lhs(vars);
  Polynomial nx(vars);
  Polynomial ny(vars);
  for (std::size_t m = 0; m < n; ++m) {
    lhs += product[m] * product[m];
    nx += x[m] * x[m];
    ny += y[m] * y[m];
  }
  return lhs - nx * ny;
}

LawClassification classify_laws(const StructureTable& t) {
  LawClassification c;
  const std::size_t n = t.dim();
  c.dim = n;

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      ++c.checked_count;
      if (c.commutative && t.at(j, k) != t.at(k, j)) {
        c.commutative = false;
        c.witnesses["commutative"] = {
            t.label(j) + "*" + t.label(k) + " = " + t.signed_label(t.at(j, k)) + " but " + t.label(k) + "*" +
                t.label(j) + " = " + t.signed_label(t.at(k, j)),
            {j, k},
            {{"xy", t.signed_label(t.at(j, k))}, {"yx", t.signed_label(t.at(k, j))}}};
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++c.checked_count;
        if (!c.associative) continue;
        const SignedBasisRef left_first = times(t, t.at(i, j), k);   // (xy)z
        const SignedBasisRef right_first = times(t, i, t.at(j, k));  // x(yz)
        if (left_first != right_first) {
          c.associative = false;
          const std::string x = t.label(i);
          const std::string y = t.label(j);
          const std::string z = t.label(k);
          c.witnesses["associative"] = {
              x + "(" + y + z + ") = " + t.signed_label(right_first) + " but (" + x + y + ")" + z +
                  " = " + t.signed_label(left_first),
              {i, j, k},
              {{"x(yz)", t.signed_label(right_first)}, {"(xy)z", t.signed_label(left_first)}}};
        }
      }
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    c.checked_count += 2;
    if (c.has_unit && (t.at(0, k) != SignedBasisRef{1, k} || t.at(k, 0) != SignedBasisRef{1, k})) {
      c.has_unit = false;
      c.witnesses["unit"] = {"e_0 is not a two-sided unit", {k},
                             {{"1x", t.signed_label(t.at(0, k))}, {"x1", t.signed_label(t.at(k, 0))}}};
    }
  }

  const VerificationReport comp = verify_composition(t);
  c.checked_count += comp.checked_count;
  c.composition = comp.passed;
  if (!comp.passed) c.witnesses["composition"] = comp.counterexamples.front();
  return c;
}

VerificationReport find_zero_divisors(const StructureTable& t) {
  VerificationReport report;
  report.subject = dim_subject("zero divisors", t.dim());
  const std::size_t n = t.dim();
  std::vector<int> acc(n);
  auto accumulate = [&](std::size_t j, std::size_t k, int sign) {
    const auto& e = t.at(j, k);
    acc[e.index] += sign * e.sign;
  };
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          for (int s : {1, -1}) {
            for (int u : {1, -1}) {
              std::fill(acc.begin(), acc.end(), 0);
              accumulate(a, c, 1);
              accumulate(a, d, u);
              accumulate(b, c, s);
              accumulate(b, d, s * u);
              ++report.checked_count;
              if (std::all_of(acc.begin(), acc.end(), [](int v) { return v == 0; })) {
                const std::string left = t.label(a) + (s > 0 ? " + " : " - ") + t.label(b);
                const std::string right = t.label(c) + (u > 0 ? " + " : " - ") + t.label(d);
                report.add({"(" + left + ")(" + right + ") = 0", {a, b, c, d},
                            {{"left", left},
                             {"right", right},
                             {"left_sign", std::to_string(s)},
                             {"right_sign", std::to_string(u)},
                             {"product", "0"}}});
              }
            }
          }
        }
      }
    }
  }
  report.finalize();
  report.runtime_note = std::to_string(report.counterexamples.size()) +
                        " zero products among two-term basis combinations";
  return report;
}

WitnessProduct sedenion_witness() {
  const StructureTable t = build_table(16);
  auto e = [](std::size_t k) { return Element::basis(16, k); };
  const Element uv = e(3);
  const Element ws = e(12);
  const Element sv = multiply(e(8), e(2), t);  // s v
  const Element wu = multiply(e(4), e(1), t);  // w u

  WitnessProduct w{uv + ws, sv + wu, Element(16), 0, 0, 0, {}};
  w.product = multiply(w.left, w.right, t);
  w.left_norm_sq = norm_sq(w.left);
  w.right_norm_sq = norm_sq(w.right);
  w.product_norm_sq = norm_sq(w.product);
  w.terms = {
      {"(uv)(sv)", describe(multiply(uv, sv, t), t)},
      {"(uv)(wu)", describe(multiply(uv, wu, t), t)},
      {"(ws)(sv)", describe(multiply(ws, sv, t), t)},
      {"(ws)(wu)", describe(multiply(ws, wu, t), t)},
  };
  return w;
}

VerificationReport verify_heart_composition() {
  VerificationReport report;
  report.subject = "heart composition (polynomial)";
  constexpr std::size_t vars = 4;
  const Polynomial a = Polynomial::variable(vars, 0);
  const Polynomial b = Polynomial::variable(vars, 1);
  const Polynomial c = Polynomial::variable(vars, 2);
  const Polynomial d = Polynomial::variable(vars, 3);
  const auto [p0, p1] = heart_formula(a, b, c, d);
  const Polynomial lhs = p0 * p0 + p1 * p1;
  const Polynomial rhs = (a * a + b * b) * (c * c + d * d);

  std::map<Polynomial::Monomial, bool> monomials;
  for (const auto& [m, coeff] : lhs.terms()) monomials[m] = true;
  for (const auto& [m, coeff] : rhs.terms()) monomials[m] = true;
  for (const auto& [m, unused] : monomials) {
    ++report.checked_count;
    const Rational l = lhs.coefficient(m);
    const Rational r = rhs.coefficient(m);
    if (l != r) {
      report.add({"coefficient mismatch at " + Polynomial::monomial_to_string(m),
                  std::vector<std::size_t>(m.begin(), m.end()),
                  {{"lhs", l.to_string()}, {"rhs", r.to_string()}}});
    }
  }
  report.finalize();
  report.runtime_note = "norm_sq(x heart y) - norm_sq(x) norm_sq(y) = " + (lhs - rhs).to_string();
  return report;
}

VerificationReport heart_composition_sampled(std::size_t trials, std::uint64_t seed) {
  VerificationReport report;
  report.subject = "heart composition (sampled)";
  RationalSampler sampler(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const Element x = sampler.element(2);
    const Element y = sampler.element(2);
    const Rational lhs = norm_sq(heart_multiply(x, y));
    const Rational rhs = norm_sq(x) * norm_sq(y);
    ++report.checked_count;
    if (lhs != rhs) {
      report.add({"norm_sq(x heart y) != norm_sq(x) norm_sq(y)", {i},
                  {{"x", x.to_string()}, {"y", y.to_string()}, {"lhs", lhs.to_string()},
                   {"rhs", rhs.to_string()}}});
    }
  }
  report.finalize();
  return report;
}

VerificationReport heart_commutativity(std::size_t trials, std::uint64_t seed) {
  VerificationReport report;
  report.subject = "heart commutativity";
  RationalSampler sampler(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    const Element x = sampler.element(2);
    const Element y = sampler.element(2);
    const Element xy = heart_multiply(x, y);
    const Element yx = heart_multiply(y, x);
    ++report.checked_count;
    if (xy != yx) {
      report.add({"x heart y != y heart x", {i},
                  {{"x", x.to_string()}, {"y", y.to_string()}, {"xy", xy.to_string()},
                   {"yx", yx.to_string()}}});
    }
  }
  report.finalize();
  return report;
}

VerificationReport heart_unit_search() {
  VerificationReport report;
  report.subject = "heart unit search";
  const std::vector<std::string> names = {"e0", "e1"};
  const std::array<Element, 2> basis = {Element::basis(2, 0), Element::basis(2, 1)};

  // Unknown e = t0 e_0 + t1 e_1. (e heart x)_m = sum_j t_j (e_j heart x)_m.
  auto unit_equations = [&](bool left) {
    std::vector<LinearEquation> eqs;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t m = 0; m < 2; ++m) {
        LinearEquation eq{std::vector<Rational>(2), basis[i][m]};
        for (std::size_t j = 0; j < 2; ++j) {
          const Element p = left ? heart_multiply(basis[j], basis[i]) : heart_multiply(basis[i], basis[j]);
          eq.coeffs[j] = p[m];
        }
        eqs.push_back(std::move(eq));
      }
    }
    return eqs;
  };

  const auto left = unit_equations(true);
  const auto right = unit_equations(false);
  std::vector<LinearEquation> both = left;
  both.insert(both.end(), right.begin(), right.end());

  auto record = [&](const char* which, const std::vector<LinearEquation>& eqs) {
    const LinearSolveResult r = solve_linear_system(eqs, 2);
    report.checked_count += eqs.size();
    Counterexample ev{std::string(which) + (r.consistent ? " unit exists" : " unit system is inconsistent"),
                      {},
                      {}};
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      ev.values.emplace_back("equation " + std::to_string(i), eqs[i].to_string(names));
    }
    if (r.consistent) {
      ev.values.emplace_back("solution", Element{r.solution[0], r.solution[1]}.to_string());
    } else {
      ev.values.emplace_back("contradiction", r.contradiction->to_string(names));
      std::string combo;
      for (std::size_t i = 0; i < r.contradiction_combination.size(); ++i) {
        if (r.contradiction_combination[i].is_zero()) continue;
        if (!combo.empty()) combo += " + ";
        combo += r.contradiction_combination[i].to_string() + "*[equation " + std::to_string(i) + "]";
      }
      ev.values.emplace_back("combination", combo);
    }
    report.evidence.push_back(std::move(ev));
    return r;
  };

  record("left", left);
  record("right", right);
  const LinearSolveResult two_sided = record("two-sided", both);
  if (two_sided.consistent) {
    report.add({"a two-sided unit exists", {},
                {{"unit", Element{two_sided.solution[0], two_sided.solution[1]}.to_string()}}});
  }
  report.finalize();
  report.runtime_note = report.passed ? "no two-sided unit: the linear system e*x = x*e = x is inconsistent"
                                      : "unit found";
  return report;
}

std::vector<VerificationReport> run_heart_checks(std::size_t trials, std::uint64_t seed) {
  return {heart_unit_search(), verify_heart_composition(), heart_composition_sampled(trials, seed),
          heart_commutativity(trials, seed + 1)};
}

}  // namespace hurwitz
