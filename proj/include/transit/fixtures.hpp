#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "transit/document.hpp"

namespace transit {

/// One expected verdict. When `pin_witness` is set the witness must match
/// exactly; otherwise only `holds` is compared.
struct ExpectedCheck {
  std::string tag;
  bool holds = true;
  bool pin_witness = false;
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> sets;

  bool operator==(const ExpectedCheck&) const = default;
};

struct Fixture {
  std::string id;
  std::string text;  // the document, in the text grammar
  std::vector<ExpectedCheck> expected;
  std::vector<std::string> expected_order;  // empty: not pinned

  Document document() const;
};

/// The worked examples shipped with the library, in a fixed order.
const std::vector<Fixture>& builtin_fixtures();
const Fixture& builtin_fixture(const std::string& id);  // throws kUnknownTag

struct CheckOutcome {
  ExpectedCheck expected;
  Verdict actual;
  std::string actual_text;  // "tag fails at (x,y,z)"
  bool ok = false;
};

struct FixtureOutcome {
  std::string id;
  std::vector<CheckOutcome> checks;
  std::optional<std::vector<std::string>> actual_order;
  bool order_ok = true;

  bool ok() const;
};

FixtureOutcome run_fixture(const Document& doc, const std::string& id, const std::vector<ExpectedCheck>& expected,
                           const std::vector<std::string>& expected_order = {});
FixtureOutcome run_fixture(const Fixture& fixture);

/// Sidecar with the expected verdicts ("<id>.expected.json").
nlohmann::json expected_to_json(const Fixture& fixture);
/// Reads a sidecar back into (expected checks, expected order).
std::pair<std::vector<ExpectedCheck>, std::vector<std::string>> expected_from_json(const nlohmann::json& j);

/// Writes "<id>.txt" and "<id>.expected.json" for every built-in fixture.
void export_fixtures(const std::string& directory);

nlohmann::json outcomes_to_json(const std::vector<FixtureOutcome>& outcomes);
std::string render_outcomes_text(const std::vector<FixtureOutcome>& outcomes);

}  // namespace transit
