#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "transit/document.hpp"
#include "transit/enumeration.hpp"
#include "transit/pyramidal.hpp"

namespace transit {

inline constexpr int kReportSchemaVersion = 1;

/// Tags understood by evaluate_tag besides the transit axioms and system
/// predicates.
inline constexpr std::string_view kW2GuardedTag = "w2-guarded";
inline constexpr std::string_view kPrePyramidalTag = "prePyramidal";
inline constexpr std::string_view kPyramidalTag = "pyramidal";
inline constexpr std::string_view kWeaklyPyramidalTag = "weaklyPyramidal";

bool is_known_tag(std::string_view tag);

/// Evaluates one tag on a document. Transit axioms run on R, which for a set
/// system is its canonical transit function (kNotTSystem if it has none).
/// Set predicates run on the system, which for a transit function is its
/// family of transit sets. Throws kUnknownTag.
Verdict evaluate_tag(const Document& doc, std::string_view tag);

/// Every tag that applies to the document, in a fixed order.
std::vector<std::string> default_tags(const Document& doc);

struct Report {
  std::string subject;
  std::string kind;  // "system" or "transit"
  GroundSetPtr ground;
  std::vector<Verdict> verdicts;
  std::optional<LadderReport> ladder;
  std::optional<OrderSearchResult> order;

  bool all_hold() const;
  bool operator==(const Report& other) const;
};

Report check_report(const Document& doc, std::string subject, const std::vector<std::string>& tags);
/// Ladder plus the verdicts for every ladder rung. Throws kNotTSystem.
Report classify_report(const Document& doc, std::string subject);
Report order_report(const Document& doc, std::string subject);

nlohmann::json to_json(const Report& report);
/// Inverse of to_json; throws kParse on malformed input.
Report report_from_json(const nlohmann::json& j);
/// Deterministic rendering of the same data as to_json.
std::string render_text(const Report& report);

nlohmann::json verdict_to_json(const GroundSet& ground, const Verdict& v);
Verdict verdict_from_json(const GroundSet& ground, const nlohmann::json& j);

/// Implication sweep results. Each counterexample carries its transit table
/// (when there is one), its family of sets, and the failing conclusion
/// verdicts with their witnesses.
nlohmann::json implications_to_json(std::span<const ImplicationReport> reports, std::size_t n_max);
std::string render_implications_text(std::span<const ImplicationReport> reports, std::size_t n_max);

nlohmann::json census_to_json(const Census& census);
std::string render_census_text(const Census& census);

}  // namespace transit
