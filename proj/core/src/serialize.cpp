#include "hurwitz/serialize.hpp"

#include <json.hpp>

#include "hurwitz/table.hpp"

namespace hurwitz {

using json = nlohmann::ordered_json;

namespace {

json to_json(const Counterexample& c) {
  json values = json::object();
  for (const auto& [k, v] : c.values) values[k] = v;
  return json{{"description", c.description}, {"indices", c.indices}, {"values", values}};
}

json to_json(const RunMeta& m) {
  json out;
  out["dim"] = m.dim ? json(*m.dim) : json(nullptr);
  out["seed"] = m.seed;
  out["trials"] = m.trials;
  return out;
}

json to_json(const VerificationReport& r) {
  json out;
  out["subject"] = r.subject;
  out["passed"] = r.passed;
  out["checked_count"] = r.checked_count;
  out["counterexamples"] = json::array();
  for (const auto& c : r.counterexamples) out["counterexamples"].push_back(to_json(c));
  if (r.skipped) out["skipped"] = true;
  if (!r.evidence.empty()) {
    out["evidence"] = json::array();
    for (const auto& e : r.evidence) out["evidence"].push_back(to_json(e));
  }
  if (!r.runtime_note.empty()) out["note"] = r.runtime_note;
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string render_table_machine(const StructureTable& t) {
  json out;
  out["dim"] = t.dim();
  out["labels"] = t.labels();
  out["entries"] = json::array();
  for (std::size_t j = 0; j < t.dim(); ++j) {
    for (std::size_t k = 0; k < t.dim(); ++k) {
      const auto& e = t.at(j, k);
      out["entries"].push_back({{"sign", e.sign}, {"index", e.index}, {"rule", rule_tag(t.rule(j, k))}});
    }
  }
  return dump(out);
}

std::string report_to_json(const VerificationReport& report, const RunMeta& meta) {
  json out = to_json(report);
  out["meta"] = to_json(meta);
  return dump(out);
}

std::string reports_to_json(const std::string& subject, const std::vector<VerificationReport>& reports,
                            const RunMeta& meta) {
  json out;
  bool passed = true;
  std::size_t checked = 0;
  json counterexamples = json::array();
  json items = json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed;
    checked += r.checked_count;
    for (const auto& c : r.counterexamples) {
      json cj = to_json(c);
      cj["report"] = r.subject;
      counterexamples.push_back(std::move(cj));
    }
    items.push_back(to_json(r));
  }
  out["subject"] = subject;
  out["passed"] = passed;
  out["checked_count"] = checked;
  out["counterexamples"] = std::move(counterexamples);
  out["reports"] = std::move(items);
  out["meta"] = to_json(meta);
  return dump(out);
}

std::string classification_to_json(const LawClassification& c, const RunMeta& meta) {
  json out;
  out["subject"] = "classify dim=" + std::to_string(c.dim);
  out["passed"] = true;
  out["checked_count"] = c.checked_count;
  out["counterexamples"] = json::array();
  out["laws"] = {{"commutative", c.commutative},
                 {"associative", c.associative},
                 {"has_unit", c.has_unit},
                 {"composition", c.composition}};
  json witnesses = json::object();
  for (const auto& [law, w] : c.witnesses) witnesses[law] = to_json(w);
  out["witnesses"] = std::move(witnesses);
  out["meta"] = to_json(meta);
  return dump(out);
}

std::string witness_to_json(const WitnessProduct& w, const VerificationReport& search, const RunMeta& meta) {
  json out = to_json(search);
  json terms = json::array();
  for (const auto& [expr, value] : w.terms) terms.push_back({{"term", expr}, {"value", value}});
  out["witness"] = {{"left", w.left.to_string()},
                    {"right", w.right.to_string()},
                    {"product", w.product.to_string()},
                    {"left_norm_sq", w.left_norm_sq.to_string()},
                    {"right_norm_sq", w.right_norm_sq.to_string()},
                    {"product_norm_sq", w.product_norm_sq.to_string()},
                    {"terms", std::move(terms)}};
  out["meta"] = to_json(meta);
  return dump(out);
}

}  // namespace hurwitz

#include "hurwitz/algebra.hpp"

namespace hurwitz {

std::string rotation_to_json(const Element& q, const Vector3& v, const Vector3& result) {
  json out;
  out["subject"] = "rotate";
  out["q"] = q.to_string();
  out["v"] = {v.x.to_string(), v.y.to_string(), v.z.to_string()};
  out["result"] = {result.x.to_string(), result.y.to_string(), result.z.to_string()};
  out["norm_sq_before"] = norm_sq(v).to_string();
  out["norm_sq_after"] = norm_sq(result).to_string();
  return dump(out);
}

}  // namespace hurwitz
