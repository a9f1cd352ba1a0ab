#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matprov/errors.hpp"

namespace matprov {

inline constexpr std::string_view kDefaultContextUrl =
    "https://matprov-project.github.io/matprov-schema";
inline constexpr std::string_view kDocumentLanguage = "en";

enum class NodeKind { Entity, Activity };
enum class EntityType { Material, Tool };
enum class EdgeKind { Usage, Generation };

enum class ParamBase {
  Temperature,
  Duration,
  Pressure,
  Mass,
  Length,
  Purity,
  Concentration,
  Rotation,
  Atmosphere,
  Form,
};

enum class ParamModifier { Start, End, Rate, Width, Height, Thickness, Diameter };

// A parameter key such as "matprov:temperature" or "matprov:length_thickness".
// Width/height/thickness/diameter attach to the length base only.
struct ParamKey {
  ParamBase base;
  std::optional<ParamModifier> modifier;

  auto operator<=>(const ParamKey&) const = default;

  std::string to_string() const;  // serialized "matprov:..." form
  static std::optional<ParamKey> from_string(std::string_view key);
};

using ParamMap = std::map<ParamKey, std::string>;

struct ProvNode {
  std::string id;
  NodeKind kind = NodeKind::Entity;
  // First label is canonical; further entries are acceptable variants
  // (PROV-JSONLD labels are multi-valued).
  std::vector<std::string> labels;
  std::optional<EntityType> entity_type;  // present iff kind == Entity
  std::vector<std::string> type_values;   // raw "type" strings, first canonical
  ParamMap params;
  // Unknown keys, preserved as canonical JSON text for round-tripping.
  std::map<std::string, std::string> extra;

  const std::string& label() const { return labels.front(); }
  bool operator==(const ProvNode&) const = default;
};

struct ProvEdge {
  EdgeKind kind = EdgeKind::Usage;
  std::string activity_id;
  std::string entity_id;

  bool operator==(const ProvEdge&) const = default;
};

struct SynthesisProcedure {
  std::string label;  // "<composition>_<characteristic>"
  std::vector<ProvNode> nodes;
  std::vector<ProvEdge> edges;
  std::optional<std::string> source_doi;  // set by dataset loaders, not serialized
  std::map<std::string, std::string> extra;

  const ProvNode* find_node(std::string_view id) const;
  bool operator==(const SynthesisProcedure&) const = default;
};

struct ProcedureDocument {
  std::vector<SynthesisProcedure> procedures;
  std::optional<std::string> context_url;

  bool operator==(const ProcedureDocument&) const = default;
};

enum class ParseErrorKind { Syntax, Schema, Reference };

class ParseError : public Error {
public:
  ParseError(ParseErrorKind kind, std::string path, std::string reason);

  ParseErrorKind kind() const { return kind_; }
  const std::string& path() const { return path_; }
  const std::string& reason() const { return reason_; }

private:
  ParseErrorKind kind_;
  std::string path_;
  std::string reason_;
};

// Parses a PROV-JSONLD document: a top-level array of procedure objects, or a
// single procedure object treated as a one-element array. Throws ParseError
// with kind Syntax (not JSON), Schema (structure violation, path populated) or
// Reference (edge pointing at an undeclared node id).
ProcedureDocument parse_document(std::string_view text);

// Serializes a document back to PROV-JSONLD. With metadata enabled every
// procedure object carries "@context" (the document's context URL, default
// kDefaultContextUrl) and "@language" ("en").
std::string serialize_document(const ProcedureDocument& doc, bool with_metadata);

}  // namespace matprov
