#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "transit/model.hpp"

namespace transit {

// Text grammar (one item per line, '#' starts a comment):
//
//   name: cycle                 optional
//   description: four-cycle     optional
//   kind: transit               optional ("sets" or "transit"); otherwise
//                               the lines below decide
//   elements: a b c d           required, before any set or entry
//   a b                         a set: labels separated by spaces or commas,
//   {c,d}                       braces optional; "{}" is an empty set (error)
//   a b : a b c                 a transit entry R(a,b) = {a,b,c}
//
// A document holds either sets or transit entries, never both. The JSON
// form carries the same fields: {"schema_version", "name", "description",
// "elements", "sets": [[...]]} or {..., "transit": [{"u","v","members"}]}.

inline constexpr int kDocumentSchemaVersion = 1;

enum class DocumentFormat { kText, kJson };

struct Document {
  std::string name;
  std::string description;
  GroundSetPtr ground;
  std::optional<SetSystem> system;
  std::optional<TransitFunction> transit;

  bool is_transit() const { return transit.has_value(); }
};

struct ParseOptions {
  DocumentFormat format = DocumentFormat::kText;
  bool complete_singletons = false;  // add every {x} to a parsed set system
};

/// Throws Error (kParse, kUnknownLabel, kEmptyCluster, kDuplicateLabel, ...).
Document parse_document(std::string_view text, const ParseOptions& options = {});
/// As parse_document, but the document must hold sets.
SetSystem parse_system(std::string_view text, const ParseOptions& options = {});
TransitFunction parse_transit(std::string_view text, const ParseOptions& options = {});

/// Reads a file; ".json" selects the JSON form. Throws kParse if unreadable.
Document load_document(const std::string& path, bool complete_singletons = false);

std::string emit_text(const Document& doc);
nlohmann::json emit_json(const Document& doc);

Document make_document(SetSystem system, std::string name = {}, std::string description = {});
Document make_document(TransitFunction transit, std::string name = {}, std::string description = {});

/// Label helpers shared by the report renderers.
std::vector<std::string> labels_of(const GroundSet& ground, Subset s);
std::vector<std::string> labels_of(const GroundSet& ground, const std::vector<std::size_t>& elements);
Subset subset_of_labels(const GroundSet& ground, const std::vector<std::string>& labels);

}  // namespace transit
