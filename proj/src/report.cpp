#include "transit/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "transit/system_predicates.hpp"
#include "transit/transit_axioms.hpp"

namespace transit {

namespace {

constexpr std::string_view kHellyTag = "helly";

Verdict check_helly(const SetSystem& system) {
  const auto c = system.clusters();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!c[i].intersects(c[j])) continue;
      for (std::size_t k = j + 1; k < c.size(); ++k) {
        if (c[i].intersects(c[k]) && c[j].intersects(c[k]) && (c[i] & c[j] & c[k]).empty()) {
          return Verdict::fail(std::string(kHellyTag), {}, {c[i], c[j], c[k]});
        }
      }
    }
  }
  return Verdict::pass(std::string(kHellyTag));
}

Verdict check_pre_pyramidal(const SetSystem& system) {
  auto result = find_compatible_order(system);
  if (result.pre_pyramidal) return Verdict::pass(std::string(kPrePyramidalTag));
  return Verdict::fail(std::string(kPrePyramidalTag), {}, std::move(result.obstruction), "no compatible order");
}

SetSystem family_of(const Document& doc) { return doc.transit ? transit_sets(*doc.transit) : *doc.system; }

bool is_t_system(const SetSystem& s) { return check_system(s, SystemPredicate::kTSystem).holds; }

TransitFunction transit_of(const Document& doc) {
  if (doc.transit) return *doc.transit;
  const Verdict t = check_system(*doc.system, SystemPredicate::kTSystem);
  if (!t.holds) {
    throw Error(ErrorCode::kNotTSystem, "transit axioms need a T-system (" + t.note + " fails)", t.elements, t.sets);
  }
  return canonical_transit_function(*doc.system);
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string format_sets(const GroundSet& ground, std::span<const Subset> sets) {
  std::vector<std::string> parts;
  for (Subset s : sets) parts.push_back(ground.format(s));
  return join(parts, " ");
}

std::string format_tuple(const GroundSet& ground, const std::vector<std::size_t>& elements) {
  return "(" + join(labels_of(ground, elements), ",") + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

nlohmann::json sets_json(const GroundSet& ground, std::span<const Subset> sets) {
  auto out = nlohmann::json::array();
  for (Subset s : sets) out.push_back(labels_of(ground, s));
  return out;
}

std::vector<Subset> sets_from_json(const GroundSet& ground, const nlohmann::json& j) {
  std::vector<Subset> out;
  for (const auto& s : j) out.push_back(subset_of_labels(ground, s.get<std::vector<std::string>>()));
  return out;
}

std::vector<std::size_t> elements_from_json(const GroundSet& ground, const nlohmann::json& j) {
  std::vector<std::size_t> out;
  for (const auto& label : j) {
    const auto e = ground.index_of(label.get<std::string>());
    if (!e) throw Error(ErrorCode::kUnknownLabel, "unknown element '" + label.get<std::string>() + "' in report");
    out.push_back(*e);
  }
  return out;
}

nlohmann::json ladder_json(const GroundSet& ground, const LadderReport& l) {
  nlohmann::json j = {{"hierarchy", l.hierarchy},
                      {"paired_hierarchy", l.paired_hierarchy},
                      {"union_closed_binary", l.union_closed_binary},
                      {"pyramidal", l.pyramidal},
                      {"pre_pyramidal", l.pre_pyramidal},
                      {"weakly_pyramidal", l.weakly_pyramidal},
                      {"weak_hierarchy", l.weak_hierarchy},
                      {"binary_clustering", l.binary_clustering}};
  j["order"] = l.order ? nlohmann::json(labels_of(ground, l.order->sequence())) : nlohmann::json(nullptr);
  return j;
}

LadderReport ladder_from_json(const GroundSet& ground, const nlohmann::json& j) {
  LadderReport l;
  l.hierarchy = j.at("hierarchy").get<bool>();
  l.paired_hierarchy = j.at("paired_hierarchy").get<bool>();
  l.union_closed_binary = j.at("union_closed_binary").get<bool>();
  l.pyramidal = j.at("pyramidal").get<bool>();
  l.pre_pyramidal = j.at("pre_pyramidal").get<bool>();
  l.weakly_pyramidal = j.at("weakly_pyramidal").get<bool>();
  l.weak_hierarchy = j.at("weak_hierarchy").get<bool>();
  l.binary_clustering = j.at("binary_clustering").get<bool>();
  if (!j.at("order").is_null()) l.order = CompatibleOrder(elements_from_json(ground, j["order"]));
  return l;
}

nlohmann::json order_json(const GroundSet& ground, const OrderSearchResult& o) {
  nlohmann::json j = {{"pre_pyramidal", o.pre_pyramidal}};
  j["order"] = o.order ? nlohmann::json(labels_of(ground, o.order->sequence())) : nlohmann::json(nullptr);
  j["obstruction"] = sets_json(ground, o.obstruction);
  return j;
}

OrderSearchResult order_from_json(const GroundSet& ground, const nlohmann::json& j) {
  OrderSearchResult o;
  o.pre_pyramidal = j.at("pre_pyramidal").get<bool>();
  if (!j.at("order").is_null()) o.order = CompatibleOrder(elements_from_json(ground, j["order"]));
  o.obstruction = sets_from_json(ground, j.at("obstruction"));
  return o;
}

std::string check_tag_for(Property p) {
  switch (p) {
    case Property::kW2Guarded: return std::string(kW2GuardedTag);
    case Property::kPrePyramidal: return std::string(kPrePyramidalTag);
    case Property::kWeaklyPyramidal: return std::string(kWeaklyPyramidalTag);
    default: return std::string(tag(p));
  }
}

}  // namespace

bool is_known_tag(std::string_view t) {
  return parse_transit_axiom(t) || parse_system_predicate(t) || t == kW2GuardedTag || t == kPrePyramidalTag ||
         t == kPyramidalTag || t == kWeaklyPyramidalTag || t == kHellyTag;
}

Verdict evaluate_tag(const Document& doc, std::string_view t) {
  if (const auto axiom = parse_transit_axiom(t)) return check(transit_of(doc), *axiom);
  if (t == kW2GuardedTag) return check_w2_guarded(transit_of(doc));
  if (const auto predicate = parse_system_predicate(t)) return check_system(family_of(doc), *predicate);
  if (t == kPrePyramidalTag) return check_pre_pyramidal(family_of(doc));
  if (t == kPyramidalTag) return is_pyramidal(family_of(doc));
  if (t == kWeaklyPyramidalTag) return is_weakly_pyramidal(family_of(doc));
  if (t == kHellyTag) return check_helly(family_of(doc));
  throw Error(ErrorCode::kUnknownTag, "unknown tag '" + std::string(t) + "'");
}

std::vector<std::string> default_tags(const Document& doc) {
  std::vector<std::string> tags;
  const bool has_transit = doc.transit || is_t_system(*doc.system);
  if (has_transit) {
    for (TransitAxiom a : kAllTransitAxioms) tags.emplace_back(tag(a));
    tags.emplace_back(kW2GuardedTag);
  }
  for (SystemPredicate p : kAllSystemPredicates) tags.emplace_back(tag(p));
  tags.emplace_back(kHellyTag);
  tags.emplace_back(kPrePyramidalTag);
  tags.emplace_back(kPyramidalTag);
  tags.emplace_back(kWeaklyPyramidalTag);
  return tags;
}

bool Report::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

bool Report::operator==(const Report& other) const {
  return subject == other.subject && kind == other.kind && *ground == *other.ground && verdicts == other.verdicts &&
         ladder == other.ladder && order == other.order;
}

namespace {

Report base_report(const Document& doc, std::string subject) {
  Report r;
  r.subject = std::move(subject);
  r.kind = doc.transit ? "transit" : "system";
  r.ground = doc.ground;
  return r;
}

}  // namespace

Report check_report(const Document& doc, std::string subject, const std::vector<std::string>& tags) {
  Report r = base_report(doc, std::move(subject));
  for (const auto& t : tags) r.verdicts.push_back(evaluate_tag(doc, t));
  return r;
}

Report classify_report(const Document& doc, std::string subject) {
  Report r = base_report(doc, std::move(subject));
  const SetSystem family = family_of(doc);
  r.ladder = classify_ladder(family);
  for (std::string_view t : {"H", "pairedH", "UC", "K1", "K2", "weakHierarchy", "WP", "MM", "K3", "binaryClustering"}) {
    r.verdicts.push_back(evaluate_tag(doc, t));
  }
  r.verdicts.push_back(evaluate_tag(doc, kPyramidalTag));
  r.verdicts.push_back(evaluate_tag(doc, kWeaklyPyramidalTag));
  return r;
}

Report order_report(const Document& doc, std::string subject) {
  Report r = base_report(doc, std::move(subject));
  r.order = find_compatible_order(family_of(doc));
  return r;
}

nlohmann::json verdict_to_json(const GroundSet& ground, const Verdict& v) {
  return {{"tag", v.tag},
          {"holds", v.holds},
          {"elements", labels_of(ground, v.elements)},
          {"sets", sets_json(ground, v.sets)},
          {"note", v.note}};
}

Verdict verdict_from_json(const GroundSet& ground, const nlohmann::json& j) {
  Verdict v;
  v.tag = j.at("tag").get<std::string>();
  v.holds = j.at("holds").get<bool>();
  v.elements = elements_from_json(ground, j.at("elements"));
  v.sets = sets_from_json(ground, j.at("sets"));
  v.note = j.at("note").get<std::string>();
  return v;
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["subject"] = report.subject;
  j["kind"] = report.kind;
  j["elements"] = report.ground->labels();
  auto verdicts = nlohmann::json::array();
  for (const auto& v : report.verdicts) verdicts.push_back(verdict_to_json(*report.ground, v));
  j["verdicts"] = std::move(verdicts);
  j["ladder"] = report.ladder ? ladder_json(*report.ground, *report.ladder) : nlohmann::json(nullptr);
  j["order"] = report.order ? order_json(*report.ground, *report.order) : nlohmann::json(nullptr);
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema_version") != kReportSchemaVersion) {
      throw Error(ErrorCode::kParse, "unsupported report schema_version " + j["schema_version"].dump());
    }
    Report r;
    r.subject = j.at("subject").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    r.ground = make_ground_set(j.at("elements").get<std::vector<std::string>>());
    for (const auto& v : j.at("verdicts")) r.verdicts.push_back(verdict_from_json(*r.ground, v));
    if (!j.at("ladder").is_null()) r.ladder = ladder_from_json(*r.ground, j["ladder"]);
    if (!j.at("order").is_null()) r.order = order_from_json(*r.ground, j["order"]);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed report: ") + e.what());
  }
}

std::string render_text(const Report& report) {
  const GroundSet& g = *report.ground;
  std::ostringstream out;
  out << "subject: " << report.subject << '\n';
  out << "kind: " << report.kind << '\n';
  out << "elements: " << join(g.labels(), " ") << '\n';
  if (!report.verdicts.empty()) {
    out << "verdicts:\n";
    for (const auto& v : report.verdicts) {
      out << "  " << pad(v.tag, 18) << (v.holds ? "holds" : "fails");
      if (!v.elements.empty()) out << "  elements " << format_tuple(g, v.elements);
      if (!v.sets.empty()) out << "  sets " << format_sets(g, v.sets);
      if (!v.note.empty()) out << "  note " << v.note;
      out << '\n';
    }
  }
  if (report.ladder) {
    const auto& l = *report.ladder;
    out << "ladder:\n";
    out << "  hierarchy           " << yes_no(l.hierarchy) << '\n';
    out << "  paired hierarchy    " << yes_no(l.paired_hierarchy) << '\n';
    out << "  ucb                 " << yes_no(l.union_closed_binary) << '\n';
    out << "  pyramidal           " << yes_no(l.pyramidal) << '\n';
    out << "  pre-pyramidal       " << yes_no(l.pre_pyramidal) << '\n';
    out << "  weakly pyramidal    " << yes_no(l.weakly_pyramidal) << '\n';
    out << "  weak hierarchy      " << yes_no(l.weak_hierarchy) << '\n';
    out << "  binary clustering   " << yes_no(l.binary_clustering) << '\n';
    if (l.order) out << "  order               " << join(labels_of(g, l.order->sequence()), " ") << '\n';
  }
  if (report.order) {
    const auto& o = *report.order;
    out << "order:\n";
    out << "  pre-pyramidal       " << yes_no(o.pre_pyramidal) << '\n';
    if (o.order) out << "  sequence            " << join(labels_of(g, o.order->sequence()), " ") << '\n';
    if (!o.obstruction.empty()) out << "  obstruction         " << format_sets(g, o.obstruction) << '\n';
  }
  return out.str();
}

// --- implication sweeps ---------------------------------------------------

namespace {

Document counterexample_document(const ImplicationReport& r) {
  const auto& ce = *r.counterexample;
  if (r.claim.domain == Domain::kSystems) return make_document(*ce.system);
  return make_document(*ce.transit);
}

std::vector<Verdict> failing_conclusions(const ImplicationReport& r) {
  std::vector<Verdict> out;
  const Document doc = counterexample_document(r);
  for (std::size_t i = 0; i < kPropertyCount; ++i) {
    const auto p = static_cast<Property>(i);
    if (!(r.claim.conclusion & bit(p))) continue;
    Verdict v = evaluate_tag(doc, check_tag_for(p));
    if (!v.holds) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

nlohmann::json implications_to_json(std::span<const ImplicationReport> reports, std::size_t n_max) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "implications";
  j["n_max"] = n_max;
  j["counting"] = "labelled";
  auto claims = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json c = {{"claim", format_claim(r.claim)},
                        {"domain", to_string(r.claim.domain)},
                        {"expected", to_string(r.claim.expected)},
                        {"hypothesis", format_mask(r.claim.hypothesis)},
                        {"conclusion", format_mask(r.claim.conclusion)},
                        {"status", to_string(r.status)},
                        {"outcome", to_string(r.outcome)},
                        {"n_max", r.n_max},
                        {"instances_checked", r.instances_checked},
                        {"hypothesis_instances", r.hypothesis_instances}};
    if (!r.claim.reference_fixture.empty()) {
      c["reference_fixture"] = r.claim.reference_fixture;
      c["reference_size"] = r.claim.reference_size;
    }
    if (r.counterexample) {
      const auto& ce = *r.counterexample;
      const GroundSet& g = *ce.system->ground();
      nlohmann::json x = {{"n", ce.n}, {"index", ce.index}, {"sets", sets_json(g, ce.system->clusters())}};
      if (ce.transit) x["transit"] = emit_json(make_document(*ce.transit))["transit"];
      auto failing = nlohmann::json::array();
      for (const auto& v : failing_conclusions(r)) failing.push_back(verdict_to_json(g, v));
      x["failing"] = std::move(failing);
      c["counterexample"] = std::move(x);
    } else {
      c["counterexample"] = nullptr;
    }
    claims.push_back(std::move(c));
  }
  j["claims"] = std::move(claims);
  return j;
}

std::string render_implications_text(std::span<const ImplicationReport> reports, std::size_t n_max) {
  std::ostringstream out;
  out << "implication sweep up to n = " << n_max << " (labelled instances, not up to isomorphism)\n";
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : reports) {
    ++counts[static_cast<int>(r.outcome)];
    out << pad(std::string(to_string(r.outcome)), 14) << format_claim(r.claim) << "  [" << to_string(r.status)
        << "; n<=" << r.n_max << ", " << r.instances_checked << " instances, " << r.hypothesis_instances
        << " with hypothesis]\n";
    if (!r.counterexample) continue;
    const auto& ce = *r.counterexample;
    const GroundSet& g = *ce.system->ground();
    out << "    counterexample n=" << ce.n << " index=" << ce.index;
    if (r.claim.reference_size != 0) out << " (worked example " << r.claim.reference_fixture << " has n=" << r.claim.reference_size << ")";
    out << '\n';
    out << "    sets: " << format_sets(g, ce.system->clusters()) << '\n';
    for (const auto& v : failing_conclusions(r)) {
      out << "    " << v.tag << " fails";
      if (!v.elements.empty()) out << " at " << format_tuple(g, v.elements);
      if (!v.sets.empty()) out << " on " << format_sets(g, v.sets);
      if (!v.note.empty()) out << " (" << v.note << ")";
      out << '\n';
    }
  }
  out << "summary: " << counts[0] << " as expected, " << counts[1] << " contradicted, " << counts[2] << " unresolved\n";
  return out.str();
}

nlohmann::json census_to_json(const Census& census) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "census";
  j["n"] = census.n;
  j["counting"] = "labelled";
  j["total"] = census.total;
  auto rows = nlohmann::json::array();
  for (const auto& row : census.rows) rows.push_back({{"properties", row.label}, {"count", row.count}});
  j["rows"] = std::move(rows);
  return j;
}

std::string render_census_text(const Census& census) {
  std::ostringstream out;
  out << "monotone transit functions on " << census.n << " labelled elements: " << census.total << '\n';
  for (const auto& row : census.rows) out << "  " << pad(row.label, 12) << std::setw(10) << row.count << '\n';
  return out.str();
}

}  // namespace transit
