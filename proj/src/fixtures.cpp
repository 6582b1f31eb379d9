#include "transit/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "transit/report.hpp"

namespace transit {

namespace {

ExpectedCheck holds(std::string tag) { return {std::move(tag), true, false, {}, {}}; }
ExpectedCheck fails(std::string tag) { return {std::move(tag), false, false, {}, {}}; }
ExpectedCheck fails_at(std::string tag, std::vector<std::string> elements) {
  return {std::move(tag), false, true, std::move(elements), {}};
}
ExpectedCheck fails_on(std::string tag, std::vector<std::vector<std::string>> sets) {
  return {std::move(tag), false, true, {}, std::move(sets)};
}

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> f;

  f.push_back({"w-not-monotone",
               "name: w-not-monotone\n"
               "description: satisfies w but not m\n"
               "elements: a b c d e\n"
               "a b : a b c d e\n"
               "a c : a c\n"
               "a d : a b c d e\n"
               "a e : a e\n"
               "b c : a b c d e\n"
               "b d : b d e\n"
               "b e : b e\n"
               "c d : a c d\n"
               "c e : a b c d e\n"
               "d e : d e\n",
               {holds("w"), holds("w1"), fails_at("m", {"c", "d", "a", "d"}), holds("a'"), fails("weakHierarchy")},
               {}});

  f.push_back({"xprime-not-w",
               "name: xprime-not-w\n"
               "description: monotone, satisfies x' but not w\n"
               "elements: a b c d\n"
               "a b : a b\n"
               "a c : a c\n"
               "b c : b c\n"
               "a d : a b c d\n"
               "b d : a b c d\n"
               "c d : a b c d\n",
               {holds("m"), holds("x'"), fails_at("w", {"a", "b", "c"}), fails("mm")},
               {}});

  f.push_back({"mm-not-w",
               "name: mm-not-w\n"
               "description: binary clustering system with MM that is not a weak hierarchy\n"
               "elements: x y z p q\n"
               "x\ny\nz\np\nq\n"
               "x y z p q\n"
               "x z\n"
               "x y p\n"
               "y z q\n",
               {holds("Tsystem"), holds("binaryClustering"), holds("MM"),
                fails_on("weakHierarchy", {{"x", "z"}, {"x", "y", "p"}, {"y", "z", "q"}}), fails("W'"), holds("m"),
                holds("mm"), fails_at("w", {"x", "y", "z"}), fails("x'")},
               {}});

  f.push_back({"k3-not-mm",
               "name: k3-not-mm\n"
               "description: T-system with K3 and K2 but without MM\n"
               "elements: a b c d e\n"
               "a\nb\nc\nd\ne\n"
               "a b c d e\n"
               "a b\na c\nb c\n"
               "a b c d\n",
               {holds("Tsystem"), holds("K3"), holds("K2"), fails("MM"), holds("k3"), fails("mm")},
               {}});

  f.push_back({"k1-not-k3",
               "name: k1-not-k3\n"
               "description: binary clustering system without K3\n"
               "elements: a b c d e\n"
               "a\nb\nc\nd\ne\n"
               "a b c d e\n"
               "a b\na c\nb c\n"
               "a b c d\n"
               "a b c e\n",
               {holds("Tsystem"), holds("K1"), fails("K3"), fails("k3"), holds("a'")},
               {}});

  f.push_back({"path4",
               "name: path4\n"
               "description: consecutive edges of a path; pyramidal but not union-closed\n"
               "elements: 1 2 3 4\n"
               "1\n2\n3\n4\n"
               "1 2 3 4\n"
               "1 2\n2 3\n3 4\n",
               {holds("binaryClustering"), holds(std::string(kPrePyramidalTag)), holds(std::string(kPyramidalTag)),
                fails_on("UC", {{"1", "2"}, {"2", "3"}}), fails_at("uc", {"1", "2", "2", "3"})},
               {"1", "2", "3", "4"}});

  f.push_back({"three-intervals",
               "name: three-intervals\n"
               "description: pyramidal, but neither uc nor u holds\n"
               "elements: x u z v y w\n"
               "x\nu\nz\nv\ny\nw\n"
               "x u z v y w\n"
               "x u z v\n"
               "u z v y\n"
               "u z v\n",
               {holds("Tsystem"), holds(std::string(kPrePyramidalTag)), holds(std::string(kPyramidalTag)), fails("uc"),
                fails("u")},
               {"x", "u", "z", "v", "y", "w"}});

  f.push_back({"u-not-uc",
               "name: u-not-uc\n"
               "description: monotone, satisfies u but not uc\n"
               "elements: a b c d\n"
               "a b : a b\n"
               "a c : a c\n"
               "b c : b c\n"
               "a d : a b c d\n"
               "b d : b c d\n"
               "c d : b c d\n",
               {holds("m"), holds("u"), fails_at("uc", {"a", "b", "a", "c"})},
               {}});

  f.push_back({"four-cycle",
               "name: four-cycle\n"
               "description: weakly pyramidal but not pre-pyramidal\n"
               "elements: a b c d\n"
               "a\nb\nc\nd\n"
               "a b c d\n"
               "a b\nb c\nc d\nd a\n",
               {holds("Tsystem"), holds("weakHierarchy"), holds("WP"), holds(std::string(kWeaklyPyramidalTag)),
                fails_on(std::string(kPrePyramidalTag), {{"a", "b"}, {"a", "d"}, {"b", "c"}, {"c", "d"}}),
                fails(std::string(kPyramidalTag)), holds("w"), holds("wp"), holds("o'"), fails("o")},
               {}});

  f.push_back({"wp-not-xprime",
               "name: wp-not-xprime\n"
               "description: monotone with wp, violating x' and mm\n"
               "elements: x y z w\n"
               "x y : x y w\n"
               "x z : x z\n"
               "x w : x w\n"
               "y z : y z\n"
               "y w : y w\n"
               "z w : x y z w\n",
               {holds("m"), holds("wp"), fails_at("x'", {"x", "y", "z", "w"}), fails_at("mm", {"x", "z", "y", "z"})},
               {}});

  f.push_back({"w-not-wp",
               "name: w-not-wp\n"
               "description: monotone with w whose transit sets violate WP\n"
               "elements: a b c d\n"
               "a b : a b c d\n"
               "a c : a b c d\n"
               "a d : a d\n"
               "b c : a b c d\n"
               "b d : b d\n"
               "c d : c d\n",
               {holds("m"), holds("w"), holds("weakHierarchy"), fails_at("wp", {"a", "d", "b", "d", "c", "d"}),
                fails_on("WP", {{"a", "d"}, {"b", "d"}, {"c", "d"}}), fails(std::string(kWeaklyPyramidalTag))},
               {}});

  f.push_back({"triangle",
               "name: triangle\n"
               "description: every transit set is the pair itself\n"
               "elements: a b c\n"
               "a b : a b\n"
               "a c : a c\n"
               "b c : b c\n",
               {holds("m"), holds("wp"), fails_at("w", {"a", "b", "c"})},
               {}});

  f.push_back({"oprime-not-wp",
               "name: oprime-not-wp\n"
               "description: monotone with o' but not wp\n"
               "elements: x y z p q r\n"
               "x y : x y p\n"
               "x p : x y p\n"
               "y p : x y p\n"
               "x z : x z r\n"
               "x r : x z r\n"
               "z r : x z r\n"
               "y z : y z q\n"
               "y q : y z q\n"
               "z q : y z q\n"
               "x q : x y z p q r\n"
               "y r : x y z p q r\n"
               "z p : x y z p q r\n"
               "p q : x y z p q r\n"
               "p r : x y z p q r\n"
               "q r : x y z p q r\n",
               {holds("m"), holds("o'"), fails_at("wp", {"x", "y", "x", "z", "y", "z"})},
               {}});

  f.push_back({"o-violation",
               "name: o-violation\n"
               "description: monotone with o' and wp but not o\n"
               "elements: a b c d\n"
               "a b : a b c d\n"
               "a c : a c\n"
               "b c : b c\n"
               "a d : a d\n"
               "b d : b d\n"
               "c d : a c d\n",
               {holds("m"), holds("o'"), holds("wp"), fails_at("o", {"a", "b"})},
               {}});

  f.push_back({"star",
               "name: star\n"
               "description: weak hierarchy whose transit function violates o\n"
               "elements: x y z u\n"
               "x\ny\nz\nu\n"
               "x z\ny z\nu z\n"
               "x y z u\n",
               {holds("weakHierarchy"), holds("w"), fails_at("o", {"x", "y"})},
               {}});

  f.push_back({"triangle-plus-point",
               "name: triangle-plus-point\n"
               "description: o holds but the system is not a weak hierarchy\n"
               "elements: x y z u\n"
               "x\ny\nz\nu\n"
               "x y z u\n"
               "x y\nx z\ny z\n",
               {fails_on("weakHierarchy", {{"x", "y"}, {"x", "z"}, {"y", "z"}}), holds("o"), fails("w")},
               {}});

  f.push_back({"ucb-path3",
               "name: ucb-path3\n"
               "description: union-closed binary clustering system that is not a hierarchy\n"
               "elements: 1 2 3\n"
               "1\n2\n3\n"
               "1 2\n2 3\n"
               "1 2 3\n",
               {holds("UC"), holds("binaryClustering"), fails("H"), holds("uc")},
               {}});

  f.push_back({"ucb-not-paired",
               "name: ucb-not-paired\n"
               "description: union-closed binary clustering system that is not a paired hierarchy\n"
               "elements: 1 2 3 4\n"
               "1\n2\n3\n4\n"
               "1 2\n2 3\n3 4\n"
               "1 2 3\n2 3 4\n"
               "1 2 3 4\n",
               {holds("UC"), holds("binaryClustering"), fails("pairedH")},
               {}});

  f.push_back({"paired-not-ucb",
               "name: paired-not-ucb\n"
               "description: paired hierarchy that is not union-closed\n"
               "elements: 1 2 3 4\n"
               "1\n2\n3\n4\n"
               "1 2\n2 3\n"
               "1 2 3 4\n",
               {holds("pairedH"), fails_on("UC", {{"1", "2"}, {"2", "3"}})},
               {}});

  return f;
}

bool matches(const GroundSet& ground, const ExpectedCheck& e, const Verdict& v) {
  if (e.holds != v.holds) return false;
  if (!e.pin_witness) return true;
  if (labels_of(ground, v.elements) != e.elements) return false;
  std::vector<std::vector<std::string>> sets;
  for (Subset s : v.sets) sets.push_back(labels_of(ground, s));
  return sets == e.sets;
}

std::string describe(const ExpectedCheck& e) {
  std::string out = e.tag + (e.holds ? " holds" : " fails");
  if (!e.elements.empty()) {
    out += " at (";
    for (std::size_t i = 0; i < e.elements.size(); ++i) out += (i ? "," : "") + e.elements[i];
    out += ")";
  }
  for (const auto& s : e.sets) {
    out += " {";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
    out += "}";
  }
  return out;
}

ExpectedCheck observed(const GroundSet& ground, const Verdict& v) {
  ExpectedCheck e{v.tag, v.holds, v.has_witness(), labels_of(ground, v.elements), {}};
  for (Subset s : v.sets) e.sets.push_back(labels_of(ground, s));
  return e;
}

}  // namespace

Document Fixture::document() const { return parse_document(text); }

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = make_fixtures();
  return fixtures;
}

const Fixture& builtin_fixture(const std::string& id) {
  for (const auto& f : builtin_fixtures()) {
    if (f.id == id) return f;
  }
  throw Error(ErrorCode::kUnknownTag, "no built-in fixture named '" + id + "'");
}

bool FixtureOutcome::ok() const {
  return order_ok && std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.ok; });
}

FixtureOutcome run_fixture(const Document& doc, const std::string& id, const std::vector<ExpectedCheck>& expected,
                           const std::vector<std::string>& expected_order) {
  FixtureOutcome out;
  out.id = id;
  for (const auto& e : expected) {
    Verdict v = evaluate_tag(doc, e.tag);
    const bool ok = matches(*doc.ground, e, v);
    std::string text = describe(observed(*doc.ground, v));
    out.checks.push_back({e, std::move(v), std::move(text), ok});
  }
  if (!expected_order.empty()) {
    const auto result = find_compatible_order(doc.transit ? transit_sets(*doc.transit) : *doc.system);
    if (result.order) out.actual_order = labels_of(*doc.ground, result.order->sequence());
    out.order_ok = out.actual_order == expected_order;
  }
  return out;
}

FixtureOutcome run_fixture(const Fixture& fixture) {
  return run_fixture(fixture.document(), fixture.id, fixture.expected, fixture.expected_order);
}

nlohmann::json expected_to_json(const Fixture& fixture) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["fixture"] = fixture.id;
  auto checks = nlohmann::json::array();
  for (const auto& e : fixture.expected) {
    nlohmann::json c = {{"tag", e.tag}, {"holds", e.holds}};
    if (e.pin_witness) {
      c["elements"] = e.elements;
      c["sets"] = e.sets;
    }
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  if (!fixture.expected_order.empty()) j["order"] = fixture.expected_order;
  return j;
}

std::pair<std::vector<ExpectedCheck>, std::vector<std::string>> expected_from_json(const nlohmann::json& j) {
  try {
    std::vector<ExpectedCheck> checks;
    for (const auto& c : j.at("checks")) {
      ExpectedCheck e;
      e.tag = c.at("tag").get<std::string>();
      e.holds = c.at("holds").get<bool>();
      e.pin_witness = c.contains("elements") || c.contains("sets");
      if (c.contains("elements")) e.elements = c["elements"].get<std::vector<std::string>>();
      if (c.contains("sets")) e.sets = c["sets"].get<std::vector<std::vector<std::string>>>();
      checks.push_back(std::move(e));
    }
    std::vector<std::string> order;
    if (j.contains("order")) order = j["order"].get<std::vector<std::string>>();
    return {std::move(checks), std::move(order)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed sidecar: ") + e.what());
  }
}

void export_fixtures(const std::string& directory) {
  std::filesystem::create_directories(directory);
  for (const auto& f : builtin_fixtures()) {
    const auto base = std::filesystem::path(directory) / f.id;
    std::ofstream(base.string() + ".txt", std::ios::binary) << f.text;
    std::ofstream(base.string() + ".expected.json", std::ios::binary) << expected_to_json(f).dump(2) << '\n';
  }
}

nlohmann::json outcomes_to_json(const std::vector<FixtureOutcome>& outcomes) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "fixtures";
  auto list = nlohmann::json::array();
  for (const auto& o : outcomes) {
    auto checks = nlohmann::json::array();
    for (const auto& c : o.checks) {
      checks.push_back({{"tag", c.expected.tag},
                        {"ok", c.ok},
                        {"expected", describe(c.expected)},
                        {"actual", c.actual_text}});
    }
    nlohmann::json entry = {{"fixture", o.id}, {"ok", o.ok()}, {"checks", std::move(checks)}};
    if (o.actual_order) entry["order"] = *o.actual_order;
    list.push_back(std::move(entry));
  }
  j["fixtures"] = std::move(list);
  return j;
}

std::string render_outcomes_text(const std::vector<FixtureOutcome>& outcomes) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    out << (o.ok() ? "ok    " : "FAIL  ") << o.id << '\n';
    if (o.ok()) ++passed;
    for (const auto& c : o.checks) {
      out << "        " << (c.ok ? "  " : "! ") << "expected " << describe(c.expected) << ", got " << c.actual_text
          << '\n';
    }
    if (!o.order_ok) out << "        ! order differs from the expected one\n";
  }
  out << passed << " of " << outcomes.size() << " fixtures as expected\n";
  return out.str();
}

}  // namespace transit
