#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/verifier.hpp"

namespace hurwitz {

/// Run parameters echoed in the "meta" object of machine output.
struct RunMeta {
  std::optional<std::size_t> dim;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
};

/// {subject, passed, checked_count, counterexamples[], meta{dim, seed, trials}},
/// plus "skipped", "evidence" and "note" when present.
std::string report_to_json(const VerificationReport& report, const RunMeta& meta);

/// Aggregate of several reports under one subject: passed is the conjunction,
/// checked_count the sum, counterexamples the concatenation; the individual
/// reports are listed under "reports".
std::string reports_to_json(const std::string& subject, const std::vector<VerificationReport>& reports,
                            const RunMeta& meta);

std::string classification_to_json(const LawClassification& c, const RunMeta& meta);

std::string witness_to_json(const WitnessProduct& w, const VerificationReport& search, const RunMeta& meta);

}  // namespace hurwitz

namespace hurwitz {

struct Vector3;
class Element;

/// {subject: "rotate", q, v, result: [x, y, z], norm_sq_before, norm_sq_after}.
std::string rotation_to_json(const Element& q, const Vector3& v, const Vector3& result);

}  // namespace hurwitz
