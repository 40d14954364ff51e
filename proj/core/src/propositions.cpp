#include "hurwitz/verifier.hpp"

#include <array>
#include <functional>
#include <random>

#include "hurwitz/algebra.hpp"
#include "hurwitz/sampling.hpp"

namespace hurwitz {

namespace {

/// Independent stream per (proposition, dimension) so reports do not depend
/// on which other propositions ran.
std::uint64_t stream_seed(std::uint64_t seed, int proposition, std::size_t dim) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(proposition), static_cast<std::uint32_t>(dim)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

VerificationReport skipped(std::string subject, std::string why) {
  VerificationReport r;
  r.subject = std::move(subject);
  r.skipped = true;
  r.runtime_note = "skipped: " + std::move(why);
  return r;
}

std::string subject(int p, std::size_t dim, const char* statement) {
  return "P" + std::to_string(p) + " dim=" + std::to_string(dim) + ": " + statement;
}

/// Nonzero imaginary pair with <x, y> = 0; needs dim >= 4.
std::pair<Element, Element> orthogonal_imaginary_pair(RationalSampler& s, std::size_t dim) {
  const Element x = s.nonzero_imaginary(dim);
  for (;;) {
    const std::array<Element, 1> against{x};
    Element y = orthogonalize(s.nonzero_imaginary(dim), against);
    if (!y.is_zero()) return {x, y};
  }
}

VerificationReport p1_squares(const StructureTable& t, std::size_t trials, RationalSampler& s) {
  VerificationReport r;
  r.subject = subject(1, t.dim(), "u imaginary => u^2 = -|u|^2");
  for (std::size_t i = 0; i < trials; ++i) {
    const Element u = s.nonzero_imaginary(t.dim());
    const Element lhs = multiply(u, u, t);
    const Element rhs = Element::scalar(t.dim(), -norm_sq(u));
    ++r.checked_count;
    if (lhs != rhs) {
      r.add({"u^2 != -|u|^2", {i}, {{"u", u.to_string()}, {"u^2", lhs.to_string()}, {"expected", rhs.to_string()}}});
    }
  }
  r.finalize();
  return r;
}

VerificationReport p2_anticommutativity(const StructureTable& t, std::size_t trials, RationalSampler& s) {
  VerificationReport r;
  r.subject = subject(2, t.dim(), "u, v imaginary, u _|_ v => uv = -vu");
  for (std::size_t i = 0; i < trials; ++i) {
    const auto [u, v] = orthogonal_imaginary_pair(s, t.dim());
    const Element uv = multiply(u, v, t);
    const Element vu = multiply(v, u, t);
    ++r.checked_count;
    if (uv != -vu) {
      r.add({"uv != -vu", {i}, {{"u", u.to_string()}, {"v", v.to_string()}, {"uv", uv.to_string()}, {"vu", vu.to_string()}}});
    }
  }
  r.finalize();
  return r;
}

VerificationReport p3_fourth_dimension(const StructureTable& t, std::size_t trials, RationalSampler& s) {
  VerificationReport r;
  r.subject = subject(3, t.dim(), "u, v imaginary, u _|_ v => uv _|_ 1, u, v");
  const Element one = Element::scalar(t.dim(), 1);
  for (std::size_t i = 0; i < trials; ++i) {
    const auto [u, v] = orthogonal_imaginary_pair(s, t.dim());
    const Element uv = multiply(u, v, t);
    ++r.checked_count;
    if (!orthogonal(uv, one) || !orthogonal(uv, u) || !orthogonal(uv, v)) {
      r.add({"uv not orthogonal to 1, u, v", {i},
             {{"u", u.to_string()}, {"v", v.to_string()}, {"uv", uv.to_string()},
              {"<uv,1>", inner(uv, one).to_string()}, {"<uv,u>", inner(uv, u).to_string()},
              {"<uv,v>", inner(uv, v).to_string()}}});
    }
  }
  r.finalize();
  return r;
}

VerificationReport p4_flexible_identity(const StructureTable& t, std::size_t trials, RationalSampler& s) {
  VerificationReport r;
  r.subject = subject(4, t.dim(), "x, y imaginary, x _|_ y => (xy)x = x(yx) = |x|^2 y");
  for (std::size_t i = 0; i < trials; ++i) {
    const auto [x, y] = orthogonal_imaginary_pair(s, t.dim());
    const Element expected = scale(norm_sq(x), y);
    const Element left = multiply(multiply(x, y, t), x, t);
    const Element right = multiply(x, multiply(y, x, t), t);
    ++r.checked_count;
    if (left != expected || right != expected) {
      r.add({"(xy)x or x(yx) differs from |x|^2 y", {i},
             {{"x", x.to_string()}, {"y", y.to_string()}, {"(xy)x", left.to_string()},
              {"x(yx)", right.to_string()}, {"expected", expected.to_string()}}});
    }
  }
  r.finalize();
  return r;
}

VerificationReport p5_orthogonality_transfer(const StructureTable& t, std::size_t trials, RationalSampler& s) {
  VerificationReport r;
  r.subject = subject(5, t.dim(), "x _|_ y <=> xz _|_ yz <=> zx _|_ zy (z != 0)");
  for (std::size_t i = 0; i < trials; ++i) {
    const Element z = s.nonzero_element(t.dim());
    const Element x = s.nonzero_element(t.dim());
    Element y = s.element(t.dim());
    // Half the trials exercise the orthogonal side of the equivalence.
    if (i % 2 == 0) {
      const std::array<Element, 1> against{x};
      y = orthogonalize(y, against);
    }
    const bool o1 = orthogonal(x, y);
    const bool o2 = orthogonal(multiply(x, z, t), multiply(y, z, t));
    const bool o3 = orthogonal(multiply(z, x, t), multiply(z, y, t));
    ++r.checked_count;
    if (o1 != o2 || o1 != o3) {
      r.add({"orthogonality not preserved", {i},
             {{"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()},
              {"x_|_y", o1 ? "true" : "false"}, {"xz_|_yz", o2 ? "true" : "false"},
              {"zx_|_zy", o3 ? "true" : "false"}}});
    }
  }
  r.finalize();
  return r;
}

VerificationReport p6_chain_identity(const StructureTable& t, std::size_t trials, RationalSampler& s) {
  VerificationReport r;
  r.subject = subject(6, t.dim(), "x, y, z imaginary, pairwise _|_, xy _|_ z => (xy)(yz) = |y|^2 xz");
  for (std::size_t i = 0; i < trials; ++i) {
    const auto [x, y] = orthogonal_imaginary_pair(s, t.dim());
    const std::vector<Element> span = gram_schmidt(std::array<Element, 3>{x, y, multiply(x, y, t)});
    Element z(t.dim());
    do {
      z = orthogonalize(s.nonzero_imaginary(t.dim()), span);
    } while (z.is_zero());
    const Element lhs = multiply(multiply(x, y, t), multiply(y, z, t), t);
    const Element rhs = scale(norm_sq(y), multiply(x, z, t));
    ++r.checked_count;
    if (lhs != rhs) {
      r.add({"(xy)(yz) != |y|^2 xz", {i},
             {{"x", x.to_string()}, {"y", y.to_string()}, {"z", z.to_string()},
              {"(xy)(yz)", lhs.to_string()}, {"expected", rhs.to_string()}}});
    }
  }
  r.finalize();
  return r;
}

VerificationReport p7_anti_associativity(const StructureTable& t, std::size_t trials, RationalSampler& s) {
  VerificationReport r;
  r.subject = subject(7, t.dim(), "x, y in {u, v, uv}, x _|_ y => x(yw) = -(xy)w");
  const std::size_t n = t.dim();
  const Element w = Element::basis(n, 4);
  auto check = [&](const Element& x, const Element& y, std::vector<std::size_t> idx) {
    const Element lhs = multiply(x, multiply(y, w, t), t);
    const Element rhs = -multiply(multiply(x, y, t), w, t);
    ++r.checked_count;
    if (lhs != rhs) {
      r.add({"x(yw) != -(xy)w", std::move(idx),
             {{"x", x.to_string()}, {"y", y.to_string()}, {"x(yw)", lhs.to_string()},
              {"-(xy)w", rhs.to_string()}}});
    }
  };
  // Exhaustive over distinct basis pairs of the quaternion level.
  for (std::size_t a = 1; a < 4; ++a) {
    for (std::size_t b = 1; b < 4; ++b) {
      if (a != b) check(Element::basis(n, a), Element::basis(n, b), {0, a, b});
    }
  }
  // Homogeneous extension: orthogonal elements of span{u, v, uv}.
  const std::array<std::size_t, 3> quaternion_imag{1, 2, 3};
  for (std::size_t i = 0; i < trials; ++i) {
    Element x(n);
    do {
      x = s.supported_on(n, quaternion_imag);
    } while (x.is_zero());
    Element y(n);
    do {
      const std::array<Element, 1> against{x};
      y = orthogonalize(s.supported_on(n, quaternion_imag), against);
    } while (y.is_zero());
    check(x, y, {1, i});
  }
  r.finalize();
  return r;
}

}  // namespace

std::vector<VerificationReport> run_proposition_suite(std::size_t max_dim, std::size_t trials,
                                                      std::uint64_t seed) {
  if (max_dim != 2 && max_dim != 4 && max_dim != 8) {
    throw DimensionError("proposition suite supports max_dim 2, 4 or 8");
  }
  std::vector<VerificationReport> reports;
  for (std::size_t dim = 2; dim <= max_dim; dim *= 2) {
    const StructureTable t = build_table(dim);
    auto run = [&](int p, auto&& fn) {
      RationalSampler sampler(stream_seed(seed, p, dim));
      reports.push_back(fn(t, trials, sampler));
    };
    run(1, p1_squares);
    if (dim >= 4) {
      run(2, p2_anticommutativity);
      run(3, p3_fourth_dimension);
      run(4, p4_flexible_identity);
    } else {
      reports.push_back(skipped(subject(2, dim, "uv = -vu"), "needs two orthogonal imaginary directions"));
      reports.push_back(skipped(subject(3, dim, "uv _|_ 1, u, v"), "needs two orthogonal imaginary directions"));
      reports.push_back(skipped(subject(4, dim, "(xy)x = x(yx) = |x|^2 y"), "needs two orthogonal imaginary directions"));
    }
    run(5, p5_orthogonality_transfer);
    if (dim >= 8) {
      run(6, p6_chain_identity);
      run(7, p7_anti_associativity);
    } else {
      reports.push_back(skipped(subject(6, dim, "(xy)(yz) = |y|^2 xz"),
                                "imaginary space too small for z _|_ x, y, xy"));
      reports.push_back(skipped(subject(7, dim, "x(yw) = -(xy)w"), "needs a doubling generator w (dim >= 8)"));
    }
  }
  return reports;
}

DerivedTable derive_table_from_propositions(std::size_t dim) {
  if (!is_supported_dim(dim)) throw DimensionError("unsupported dimension " + std::to_string(dim));
  DerivedTable d;
  d.dim = dim;
  d.entries.assign(dim * dim, std::nullopt);
  bool changed = true;
  std::vector<bool> conflicted(dim * dim, false);

  auto set = [&](std::size_t j, std::size_t k, SignedBasisRef v, const char* why) {
    auto& slot = d.entries[j * dim + k];
    if (!slot) {
      slot = v;
      changed = true;
    } else if (*slot != v && !conflicted[j * dim + k]) {
      conflicted[j * dim + k] = true;
      d.conflicts.push_back(std::string(why) + " contradicts e" + std::to_string(j) + "*e" +
                            std::to_string(k));
    }
  };
  auto get = [&](std::size_t j, std::size_t k) -> const std::optional<SignedBasisRef>& {
    return d.entries[j * dim + k];
  };

  // Scalars as vectors, imaginary squares, and the naming e_j g = e_{j+g}.
  for (std::size_t k = 0; k < dim; ++k) {
    set(0, k, {1, k}, "unit");
    set(k, 0, {1, k}, "unit");
    if (k) set(k, k, {-1, 0}, "square");
  }
  for (std::size_t g = 1; g < dim; g *= 2) {
    for (std::size_t j = 1; j < g; ++j) set(j, g, {1, j + g}, "naming");
  }

  while (changed) {
    changed = false;
    for (std::size_t j = 1; j < dim; ++j) {
      for (std::size_t k = 1; k < dim; ++k) {
        if (j == k || !get(j, k)) continue;
        const SignedBasisRef xy = *get(j, k);
        // uv = -vu
        set(k, j, {-xy.sign, xy.index}, "anticommutativity");
        if (xy.index == 0 || xy.index == j || xy.index == k) continue;
        // (xy)x = y, x(yx) = y
        set(xy.index, j, {xy.sign, k}, "(xy)x = y");
        set(j, xy.index, {-xy.sign, k}, "x(yx) = y");
        // (xy)(yz) = xz for z distinct from x, y and orthogonal to xy.
        for (std::size_t z = 1; z < dim; ++z) {
          if (z == j || z == k || z == xy.index || !get(k, z)) continue;
          const SignedBasisRef yz = *get(k, z);
          if (yz.index == 0) continue;
          const int st = xy.sign * yz.sign;
          if (const auto& xz = get(j, z)) set(xy.index, yz.index, {st * xz->sign, xz->index}, "(xy)(yz) = xz");
          if (const auto& lhs = get(xy.index, yz.index)) set(j, z, {st * lhs->sign, lhs->index}, "(xy)(yz) = xz");
        }
      }
    }
    // x(yg) = -(xy)g for distinct imaginary x, y below the generator g.
    for (std::size_t g = 2; g < dim; g *= 2) {
      for (std::size_t x = 1; x < g; ++x) {
        for (std::size_t y = 1; y < g; ++y) {
          if (x == y || !get(x, y)) continue;
          const SignedBasisRef xy = *get(x, y);
          if (xy.index == 0 || xy.index >= g) continue;
          set(x, y + g, {-xy.sign, xy.index + g}, "x(yg) = -(xy)g");
        }
      }
    }
  }
  return d;
}

VerificationReport cross_check_derivation(const StructureTable& t) {
  VerificationReport report;
  report.subject = "derivation cross-check dim=" + std::to_string(t.dim());
  const DerivedTable d = derive_table_from_propositions(t.dim());
  for (const auto& c : d.conflicts) report.add({c, {}, {}});
  for (std::size_t j = 1; j < t.dim(); ++j) {
    for (std::size_t k = 1; k < t.dim(); ++k) {
      ++report.checked_count;
      const auto& derived = d.at(j, k);
      if (!derived) {
        report.add({"product not derivable", {j, k}, {{"table", t.signed_label(t.at(j, k))}}});
      } else if (*derived != t.at(j, k)) {
        report.add({"derived product differs from table", {j, k},
                    {{"derived", t.signed_label(*derived)}, {"table", t.signed_label(t.at(j, k))}}});
      }
    }
  }
  report.finalize();
  return report;
}

}  // namespace hurwitz
