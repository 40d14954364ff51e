#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hurwitz/algebra.hpp"
#include "hurwitz/serialize.hpp"
#include "hurwitz/table.hpp"
#include "hurwitz/verifier.hpp"

namespace hurwitz::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::string format = "text";
  std::string q;
  std::string v;

  bool machine() const { return format == "machine"; }
  RunMeta meta(bool with_dim = true) const {
    return {with_dim ? std::optional<std::size_t>(dim) : std::nullopt, seed, trials};
  }
};

constexpr std::size_t kListedCounterexamples = 10;

std::vector<Rational> parse_rationals(const std::string& text, std::size_t expected, const char* what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
      throw UsageError(std::string(what) + ": " + e.what());
    }
  }
  if (out.size() != expected) {
    throw UsageError(std::string(what) + ": expected " + std::to_string(expected) +
                     " comma-separated rationals, got " + std::to_string(out.size()));
  }
  return out;
}

void print_counterexample(std::ostream& out, const Counterexample& c) {
  out << "    " << c.description;
  if (!c.indices.empty()) {
    out << " [";
    for (std::size_t i = 0; i < c.indices.size(); ++i) out << (i ? "," : "") << c.indices[i];
    out << "]";
  }
  for (const auto& [k, v] : c.values) out << " " << k << "=" << v;
  out << '\n';
}

void print_report(std::ostream& out, const VerificationReport& r) {
  if (r.skipped) {
    out << r.subject << ": " << r.runtime_note << '\n';
    return;
  }
  out << r.subject << ": " << (r.passed ? "passed" : "failed") << ", " << r.checked_count << " checked";
  if (!r.passed) out << ", " << r.counterexamples.size() << " counterexamples";
  out << '\n';
  for (const auto& e : r.evidence) {
    out << "    " << e.description << '\n';
    for (const auto& [k, v] : e.values) out << "      " << k << ": " << v << '\n';
  }
  const std::size_t shown = std::min(r.counterexamples.size(), kListedCounterexamples);
  for (std::size_t i = 0; i < shown; ++i) print_counterexample(out, r.counterexamples[i]);
  if (r.counterexamples.size() > shown) {
    out << "    ... (" << r.counterexamples.size() - shown << " more)\n";
  }
}

int cmd_table(const Config& cfg, std::ostream& out) {
  const StructureTable t = build_table(cfg.dim);
  out << (cfg.machine() ? render_table_machine(t) : render_table_text(t));
  return kExitOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const VerificationReport r = verify_composition(build_table(cfg.dim));
  if (cfg.machine()) {
    out << report_to_json(r, cfg.meta());
  } else {
    out << r.subject << ": " << (r.passed ? "passed" : "failed") << ", " << r.checked_count
        << " conditions checked";
    if (!r.passed) out << ", " << r.counterexamples.size() << " violated";
    out << '\n';
    const std::size_t shown = std::min(r.counterexamples.size(), kListedCounterexamples);
    for (std::size_t i = 0; i < shown; ++i) print_counterexample(out, r.counterexamples[i]);
    if (r.counterexamples.size() > shown) {
      out << "    ... (" << r.counterexamples.size() - shown << " more)\n";
    }
  }
  return r.passed ? kExitOk : kExitFailed;
}

int cmd_classify(const Config& cfg, std::ostream& out) {
  const LawClassification c = classify_laws(build_table(cfg.dim));
  if (cfg.machine()) {
    out << classification_to_json(c, cfg.meta());
    return kExitOk;
  }
  out << "classify dim=" << c.dim << " (" << c.checked_count << " checks)\n";
  auto line = [&](const char* name, const char* key, bool holds) {
    out << "  " << name << ": " << (holds ? "yes" : "no");
    if (!holds) {
      const Counterexample& w = c.witnesses.at(key);
      out << "  witness: " << w.description;
    }
    out << '\n';
  };
  line("commutative", "commutative", c.commutative);
  line("associative", "associative", c.associative);
  line("unit", "unit", c.has_unit);
  line("composition", "composition", c.composition);
  return kExitOk;
}

int cmd_suite(const Config& cfg, std::ostream& out) {
  const auto reports = run_proposition_suite(cfg.dim, cfg.trials, cfg.seed);
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  const std::string subject = "proposition suite dim<=" + std::to_string(cfg.dim);
  if (cfg.machine()) {
    out << reports_to_json(subject, reports, cfg.meta());
  } else {
    for (const auto& r : reports) print_report(out, r);
    out << subject << ": " << (passed ? "passed" : "failed") << '\n';
  }
  return passed ? kExitOk : kExitFailed;
}

int cmd_witness(const Config& cfg, std::ostream& out) {
  const WitnessProduct w = sedenion_witness();
  const VerificationReport search = find_zero_divisors(build_table(16));
  const bool listed = std::any_of(search.counterexamples.begin(), search.counterexamples.end(),
                                  [](const Counterexample& c) {
                                    return c.indices == std::vector<std::size_t>{3, 12, 5, 10};
                                  });
  const bool reproduced = w.product.is_zero() && w.left_norm_sq == Rational(2) &&
                          w.right_norm_sq == Rational(2) && listed;
  if (cfg.machine()) {
    out << witness_to_json(w, search, {16, cfg.seed, cfg.trials});
  } else {
    out << "x = uv + ws = " << w.left << "\n";
    out << "y = sv + wu = " << w.right << "\n";
    out << "norm_sq(x) = " << w.left_norm_sq << ", norm_sq(y) = " << w.right_norm_sq << "\n";
    out << "xy = (uv)(sv) + (uv)(wu) + (ws)(sv) + (ws)(wu)\n";
    for (const auto& [expr, value] : w.terms) out << "  " << expr << " = " << value << "\n";
    out << "xy = " << w.product << "\n";
    out << "norm_sq(xy) = " << w.product_norm_sq << " but norm_sq(x) * norm_sq(y) = "
        << w.left_norm_sq * w.right_norm_sq << "\n";
    out << search.subject << ": " << search.counterexamples.size() << " zero products among "
        << search.checked_count << " two-term pairs" << (listed ? " (witness included)" : "") << "\n";
  }
  return reproduced ? kExitOk : kExitFailed;
}

int cmd_heart(const Config& cfg, std::ostream& out) {
  const auto reports = run_heart_checks(cfg.trials, cfg.seed);
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  if (cfg.machine()) {
    out << reports_to_json("heart", reports, cfg.meta(false));
  } else {
    for (const auto& r : reports) print_report(out, r);
    out << "heart: " << (passed ? "passed" : "failed") << '\n';
  }
  return passed ? kExitOk : kExitFailed;
}

int cmd_rotate(const Config& cfg, std::ostream& out) {
  const auto qc = parse_rationals(cfg.q, 4, "--q");
  const auto vc = parse_rationals(cfg.v, 3, "--v");
  const Element q{qc[0], qc[1], qc[2], qc[3]};
  if (q.is_zero()) throw UsageError("--q: the zero quaternion does not define a rotation");
  const Vector3 v{vc[0], vc[1], vc[2]};
  const Vector3 r = rotate(q, v);
  out << (cfg.machine() ? rotation_to_json(q, v, r) : to_string(r) + "\n");
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multiplication tables and identity checks for R, C, H, O and the 16-dimensional doubling"};
  app.name("hurwitz");
  app.require_subcommand(1);

  Config cfg;
  const std::vector<std::size_t> dims{1, 2, 4, 8, 16};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
  };
  auto add_dim = [&](CLI::App* sub, const std::vector<std::size_t>& allowed) {
    sub->add_option("--dim", cfg.dim, "Algebra dimension")->required()->check(CLI::IsMember(allowed));
  };

  auto* table = app.add_subcommand("table", "Print the multiplication table");
  add_dim(table, dims);
  add_format(table);

  auto* verify = app.add_subcommand("verify", "Check the composition identity coefficient by coefficient");
  add_dim(verify, dims);
  add_format(verify);

  auto* classify = app.add_subcommand("classify", "Commutativity, associativity, unit and composition");
  add_dim(classify, dims);
  add_format(classify);

  auto* suite = app.add_subcommand("suite", "Randomized exact checks of the geometric propositions");
  add_dim(suite, {2, 4, 8});
  suite->add_option("--trials", cfg.trials, "Trials per proposition")->check(CLI::PositiveNumber)->capture_default_str();
  suite->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  add_format(suite);

  auto* witness = app.add_subcommand("witness", "Zero product (uv + ws)(sv + wu) in dimension 16");
  add_format(witness);

  auto* heart = app.add_subcommand("heart", "Unit search and composition checks for the heart product");
  heart->add_option("--trials", cfg.trials, "Random pairs")->check(CLI::PositiveNumber)->capture_default_str();
  heart->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  add_format(heart);

  auto* rotate = app.add_subcommand("rotate", "Rotate a 3-vector by q v q^-1");
  rotate->add_option("--q", cfg.q, "Quaternion a,b,c,d (rationals)")->required();
  rotate->add_option("--v", cfg.v, "Vector x,y,z (rationals)")->required();
  add_format(rotate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (classify->parsed()) return cmd_classify(cfg, out);
    if (suite->parsed()) return cmd_suite(cfg, out);
    if (witness->parsed()) return cmd_witness(cfg, out);
    if (heart->parsed()) return cmd_heart(cfg, out);
    if (rotate->parsed()) return cmd_rotate(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace hurwitz::cli
