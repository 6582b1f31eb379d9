#include "transit/document.hpp"

#include <fstream>
#include <sstream>

namespace transit {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string where(std::size_t line) { return line == 0 ? std::string() : "line " + std::to_string(line) + ": "; }

// Splits on whitespace and commas; braces are dropped.
std::vector<std::string> label_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == ',' || c == '{' || c == '}' || c == '\r') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

Subset resolve(const GroundSet& ground, const std::vector<std::string>& labels, std::size_t line) {
  Subset s;
  for (const auto& label : labels) {
    const auto e = ground.index_of(label);
    if (!e) throw Error(ErrorCode::kUnknownLabel, where(line) + "unknown element '" + label + "'");
    s = s.with(*e);
  }
  return s;
}

bool header(std::string_view line, std::string_view key, std::string_view& value) {
  if (line.size() <= key.size() || line.substr(0, key.size()) != key) return false;
  const auto rest = trim(line.substr(key.size()));
  if (rest.empty() || rest.front() != ':') return false;
  value = trim(rest.substr(1));
  return true;
}

SetSystem finish_system(GroundSetPtr ground, std::vector<Subset> sets, bool complete) {
  SetSystem system(std::move(ground), std::move(sets));
  return complete ? system.with_singletons() : system;
}

Document parse_text(std::string_view text, bool complete_singletons) {
  Document doc;
  std::vector<Subset> sets;
  std::vector<PairAssignment> entries;
  std::string kind;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::string_view value;
    if (header(line, "name", value)) {
      doc.name = value;
      continue;
    }
    if (header(line, "description", value)) {
      doc.description = value;
      continue;
    }
    if (header(line, "kind", value)) {
      if (value != "sets" && value != "transit") {
        throw Error(ErrorCode::kParse, where(line_no) + "kind must be 'sets' or 'transit'");
      }
      kind = value;
      continue;
    }
    if (header(line, "elements", value)) {
      if (doc.ground) throw Error(ErrorCode::kParse, where(line_no) + "second 'elements:' line");
      doc.ground = make_ground_set(label_tokens(value));
      continue;
    }
    if (!doc.ground) throw Error(ErrorCode::kParse, where(line_no) + "expected 'elements:' before any set");

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      const auto labels = label_tokens(line);
      if (labels.empty()) throw Error(ErrorCode::kEmptyCluster, where(line_no) + "empty set");
      sets.push_back(resolve(*doc.ground, labels, line_no));
      continue;
    }
    const auto pair = label_tokens(line.substr(0, colon));
    if (pair.size() != 2) throw Error(ErrorCode::kParse, where(line_no) + "transit entry needs exactly two elements before ':'");
    const auto members = resolve(*doc.ground, label_tokens(line.substr(colon + 1)), line_no);
    const Subset uv = resolve(*doc.ground, pair, line_no);
    const std::size_t u = *doc.ground->index_of(pair[0]);
    const std::size_t v = *doc.ground->index_of(pair[1]);
    if (uv.size() != 2) throw Error(ErrorCode::kDiagonalEntry, where(line_no) + "R(u,u) is fixed to {u}", {u});
    entries.push_back({u, v, members});
  }
  if (!doc.ground) throw Error(ErrorCode::kParse, "missing 'elements:' line");
  if (!sets.empty() && !entries.empty()) {
    throw Error(ErrorCode::kParse, "a document holds sets or transit entries, not both");
  }
  if ((kind == "sets" && !entries.empty()) || (kind == "transit" && !sets.empty())) {
    throw Error(ErrorCode::kParse, "document content does not match 'kind: " + kind + "'");
  }
  if (!entries.empty() || kind == "transit") {
    doc.transit = make_transit_function(doc.ground, entries);
  } else {
    doc.system = finish_system(doc.ground, std::move(sets), complete_singletons);
  }
  return doc;
}

std::vector<std::string> json_labels(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, std::string(what) + " must be an array of labels");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw Error(ErrorCode::kParse, std::string(what) + " must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Document parse_json(std::string_view text, bool complete_singletons) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kParse, "document must be a JSON object");
  if (j.contains("schema_version") && j["schema_version"] != kDocumentSchemaVersion) {
    throw Error(ErrorCode::kParse, "unsupported schema_version " + j["schema_version"].dump());
  }
  if (!j.contains("elements")) throw Error(ErrorCode::kParse, "missing \"elements\"");
  Document doc;
  doc.name = j.value("name", "");
  doc.description = j.value("description", "");
  doc.ground = make_ground_set(json_labels(j["elements"], "\"elements\""));
  const bool has_sets = j.contains("sets");
  const bool has_transit = j.contains("transit");
  if (has_sets && has_transit) throw Error(ErrorCode::kParse, "a document holds sets or transit entries, not both");
  if (has_transit) {
    std::vector<PairAssignment> entries;
    for (const auto& entry : j["transit"]) {
      if (!entry.is_object() || !entry.contains("u") || !entry.contains("v") || !entry.contains("members")) {
        throw Error(ErrorCode::kParse, "transit entries need \"u\", \"v\" and \"members\"");
      }
      const auto u = doc.ground->index_of(entry["u"].get<std::string>());
      const auto v = doc.ground->index_of(entry["v"].get<std::string>());
      if (!u || !v) throw Error(ErrorCode::kUnknownLabel, "unknown element in transit entry " + entry.dump());
      if (*u == *v) throw Error(ErrorCode::kDiagonalEntry, "R(u,u) is fixed to {u}", {*u});
      entries.push_back({*u, *v, resolve(*doc.ground, json_labels(entry["members"], "\"members\""), 0)});
    }
    doc.transit = make_transit_function(doc.ground, entries);
    return doc;
  }
  std::vector<Subset> sets;
  if (has_sets) {
    if (!j["sets"].is_array()) throw Error(ErrorCode::kParse, "\"sets\" must be an array");
    for (const auto& set : j["sets"]) {
      const auto labels = json_labels(set, "each set");
      if (labels.empty()) throw Error(ErrorCode::kEmptyCluster, "empty set");
      sets.push_back(resolve(*doc.ground, labels, 0));
    }
  }
  doc.system = finish_system(doc.ground, std::move(sets), complete_singletons);
  return doc;
}

std::string join(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}

}  // namespace

Document parse_document(std::string_view text, const ParseOptions& options) {
  if (options.format == DocumentFormat::kText) return parse_text(text, options.complete_singletons);
  try {
    return parse_json(text, options.complete_singletons);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed document: ") + e.what());
  }
}

SetSystem parse_system(std::string_view text, const ParseOptions& options) {
  Document doc = parse_document(text, options);
  if (!doc.system) throw Error(ErrorCode::kParse, "expected a set system, found transit entries");
  return std::move(*doc.system);
}

TransitFunction parse_transit(std::string_view text, const ParseOptions& options) {
  Document doc = parse_document(text, options);
  if (!doc.transit) throw Error(ErrorCode::kParse, "expected transit entries, found a set system");
  return std::move(*doc.transit);
}

Document load_document(const std::string& path, bool complete_singletons) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  return parse_document(buffer.str(), {json ? DocumentFormat::kJson : DocumentFormat::kText, complete_singletons});
}

std::string emit_text(const Document& doc) {
  std::ostringstream out;
  if (!doc.name.empty()) out << "name: " << doc.name << '\n';
  if (!doc.description.empty()) out << "description: " << doc.description << '\n';
  // A transit function on one element has no entries to tell it apart.
  if (doc.transit && doc.ground->size() == 1) out << "kind: transit\n";
  out << "elements: " << join(doc.ground->labels()) << '\n';
  if (doc.transit) {
    const auto& r = *doc.transit;
    for (std::size_t u = 0; u < r.n(); ++u) {
      for (std::size_t v = u + 1; v < r.n(); ++v) {
        out << doc.ground->label(u) << ' ' << doc.ground->label(v) << " : " << join(labels_of(*doc.ground, r.at(u, v)))
            << '\n';
      }
    }
  } else if (doc.system) {
    for (Subset c : doc.system->clusters()) out << join(labels_of(*doc.ground, c)) << '\n';
  }
  return out.str();
}

nlohmann::json emit_json(const Document& doc) {
  nlohmann::json j;
  j["schema_version"] = kDocumentSchemaVersion;
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.description.empty()) j["description"] = doc.description;
  j["elements"] = doc.ground->labels();
  if (doc.transit) {
    auto entries = nlohmann::json::array();
    const auto& r = *doc.transit;
    for (std::size_t u = 0; u < r.n(); ++u) {
      for (std::size_t v = u + 1; v < r.n(); ++v) {
        entries.push_back({{"u", doc.ground->label(u)},
                           {"v", doc.ground->label(v)},
                           {"members", labels_of(*doc.ground, r.at(u, v))}});
      }
    }
    j["transit"] = std::move(entries);
  } else if (doc.system) {
    auto sets = nlohmann::json::array();
    for (Subset c : doc.system->clusters()) sets.push_back(labels_of(*doc.ground, c));
    j["sets"] = std::move(sets);
  }
  return j;
}

Document make_document(SetSystem system, std::string name, std::string description) {
  Document doc;
  doc.name = std::move(name);
  doc.description = std::move(description);
  doc.ground = system.ground();
  doc.system = std::move(system);
  return doc;
}

Document make_document(TransitFunction transit, std::string name, std::string description) {
  Document doc;
  doc.name = std::move(name);
  doc.description = std::move(description);
  doc.ground = transit.ground();
  doc.transit = std::move(transit);
  return doc;
}

std::vector<std::string> labels_of(const GroundSet& ground, Subset s) {
  std::vector<std::string> out;
  for (std::size_t e : s) out.push_back(ground.label(e));
  return out;
}

std::vector<std::string> labels_of(const GroundSet& ground, const std::vector<std::size_t>& elements) {
  std::vector<std::string> out;
  for (std::size_t e : elements) out.push_back(ground.label(e));
  return out;
}

Subset subset_of_labels(const GroundSet& ground, const std::vector<std::string>& labels) {
  return resolve(ground, labels, 0);
}

}  // namespace transit
