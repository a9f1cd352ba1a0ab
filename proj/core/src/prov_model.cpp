#include "matprov/prov_model.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include <json.hpp>

namespace matprov {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kParamPrefix = "matprov:";

constexpr std::array<std::pair<ParamBase, std::string_view>, 10> kBases = {{
    {ParamBase::Temperature, "temperature"},
    {ParamBase::Duration, "duration"},
    {ParamBase::Pressure, "pressure"},
    {ParamBase::Mass, "mass"},
    {ParamBase::Length, "length"},
    {ParamBase::Purity, "purity"},
    {ParamBase::Concentration, "concentration"},
    {ParamBase::Rotation, "rotation"},
    {ParamBase::Atmosphere, "atmosphere"},
    {ParamBase::Form, "form"},
}};

constexpr std::array<std::pair<ParamModifier, std::string_view>, 7> kModifiers = {{
    {ParamModifier::Start, "start"},
    {ParamModifier::End, "end"},
    {ParamModifier::Rate, "rate"},
    {ParamModifier::Width, "width"},
    {ParamModifier::Height, "height"},
    {ParamModifier::Thickness, "thickness"},
    {ParamModifier::Diameter, "diameter"},
}};

bool is_length_specific(ParamModifier m) {
  return m == ParamModifier::Width || m == ParamModifier::Height ||
         m == ParamModifier::Thickness || m == ParamModifier::Diameter;
}

[[noreturn]] void schema_error(std::string path, std::string reason) {
  throw ParseError(ParseErrorKind::Schema, std::move(path), std::move(reason));
}

// "label" and "type" arrive as arrays of {"@value": <string>}.
std::vector<std::string> parse_value_list(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty())
    schema_error(path, "expected a non-empty array of {\"@value\"} objects");
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& item : v) {
    if (!item.is_object() || !item.contains("@value") || !item.at("@value").is_string())
      schema_error(path, "expected {\"@value\": <string>} entries");
    out.push_back(item.at("@value").get<std::string>());
  }
  return out;
}

std::string require_string(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) schema_error(path, std::string("missing key \"") + key + "\"");
  const auto& v = obj.at(key);
  if (!v.is_string()) schema_error(path + "." + key, "expected a string");
  return v.get<std::string>();
}

ProvNode parse_node(const json& obj, NodeKind kind, const std::string& path) {
  ProvNode node;
  node.kind = kind;
  node.id = require_string(obj, "@id", path);
  if (node.id.empty()) schema_error(path + ".@id", "node id is empty");

  if (!obj.contains("label")) schema_error(path, "node has no label");
  node.labels = parse_value_list(obj.at("label"), path + ".label");
  if (node.labels.front().empty()) schema_error(path + ".label", "label is empty");

  if (obj.contains("type")) {
    if (kind == NodeKind::Activity)
      schema_error(path + ".type", "activity nodes must not carry an entity type");
    node.type_values = parse_value_list(obj.at("type"), path + ".type");
    const std::string& t = node.type_values.front();
    if (t == "material")
      node.entity_type = EntityType::Material;
    else if (t == "tool")
      node.entity_type = EntityType::Tool;
    else
      schema_error(path + ".type", "unknown entity type \"" + t + "\"");
  } else if (kind == NodeKind::Entity) {
    schema_error(path, "entity node \"" + node.id + "\" has no type");
  }

  for (const auto& [key, value] : obj.items()) {
    if (key == "@type" || key == "@id" || key == "label" || key == "type") continue;
    if (key.starts_with(kParamPrefix)) {
      auto parsed = ParamKey::from_string(key);
      if (!parsed) schema_error(path + "." + key, "malformed parameter key");
      auto values = parse_value_list(value, path + "." + key);
      std::string combined = values.front();
      for (std::size_t i = 1; i < values.size(); ++i) combined += ", " + values[i];
      node.params[*parsed] = std::move(combined);
    } else {
      node.extra[key] = value.dump();
    }
  }
  return node;
}

ProvEdge parse_edge(const json& obj, EdgeKind kind, const std::string& path) {
  ProvEdge edge;
  edge.kind = kind;
  edge.activity_id = require_string(obj, "activity", path);
  edge.entity_id = require_string(obj, "entity", path);
  for (const auto& item : obj.items()) {
    const std::string& key = item.key();
    if (key != "@type" && key != "activity" && key != "entity")
      schema_error(path + "." + key, "unexpected key on an edge");
  }
  return edge;
}

SynthesisProcedure parse_procedure(const json& obj, std::size_t index,
                                   std::optional<std::string>& context_url) {
  const std::string path = "$[" + std::to_string(index) + "]";
  if (!obj.is_object()) schema_error(path, "procedure must be a JSON object");

  SynthesisProcedure proc;
  proc.label = require_string(obj, "label", path);
  if (proc.label.empty()) schema_error(path + ".label", "label is empty");

  if (!obj.contains("@graph")) schema_error(path, "missing key \"@graph\"");
  const auto& graph = obj.at("@graph");
  if (!graph.is_array()) schema_error(path + ".@graph", "expected an array");

  for (const auto& [key, value] : obj.items()) {
    if (key == "label" || key == "@graph") continue;
    if (key == "@context") {
      if (!value.is_string()) schema_error(path + ".@context", "expected a string");
      if (!context_url) context_url = value.get<std::string>();
      continue;
    }
    if (key == "@language") continue;  // fixed to "en" on output
    proc.extra[key] = value.dump();
  }

  std::unordered_set<std::string> ids;
  for (std::size_t j = 0; j < graph.size(); ++j) {
    const std::string epath = path + ".@graph[" + std::to_string(j) + "]";
    const auto& element = graph[j];
    if (!element.is_object()) schema_error(epath, "graph element must be an object");
    const std::string type = require_string(element, "@type", epath);
    if (type == "Entity" || type == "Activity") {
      ProvNode node = parse_node(
          element, type == "Entity" ? NodeKind::Entity : NodeKind::Activity, epath);
      if (!ids.insert(node.id).second)
        schema_error(epath + ".@id", "duplicate node id \"" + node.id + "\"");
      proc.nodes.push_back(std::move(node));
    } else if (type == "Usage" || type == "Generation") {
      proc.edges.push_back(parse_edge(
          element, type == "Usage" ? EdgeKind::Usage : EdgeKind::Generation, epath));
    } else {
      schema_error(epath + ".@type", "unknown @type \"" + type + "\"");
    }
  }

  std::unordered_map<std::string_view, const ProvNode*> by_id;
  for (const auto& node : proc.nodes) by_id.emplace(node.id, &node);
  for (std::size_t j = 0; j < proc.edges.size(); ++j) {
    const auto& edge = proc.edges[j];
    const std::string epath = path + ".edges[" + std::to_string(j) + "]";
    auto check = [&](const std::string& id, NodeKind expected, const char* role) {
      auto it = by_id.find(id);
      if (it == by_id.end())
        throw ParseError(ParseErrorKind::Reference, epath,
                         std::string("edge references undeclared node id \"") + id +
                             "\"");
      if (it->second->kind != expected)
        schema_error(epath, std::string(role) + " \"" + id + "\" is not an " +
                                (expected == NodeKind::Activity ? "activity" : "entity") +
                                " node");
    };
    check(edge.activity_id, NodeKind::Activity, "activity");
    check(edge.entity_id, NodeKind::Entity, "entity");
  }
  return proc;
}

ordered_json value_list_json(std::span<const std::string> values) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : values) arr.push_back(ordered_json{{"@value", v}});
  return arr;
}

ordered_json node_json(const ProvNode& node) {
  ordered_json obj;
  obj["@type"] = node.kind == NodeKind::Entity ? "Entity" : "Activity";
  obj["@id"] = node.id;
  obj["label"] = value_list_json(node.labels);
  if (node.kind == NodeKind::Entity) {
    if (!node.type_values.empty()) {
      obj["type"] = value_list_json(node.type_values);
    } else if (node.entity_type) {
      std::vector<std::string> fallback{
          *node.entity_type == EntityType::Material ? "material" : "tool"};
      obj["type"] = value_list_json(fallback);
    }
  }
  for (const auto& [key, value] : node.params) {
    std::vector<std::string> single{value};
    obj[key.to_string()] = value_list_json(single);
  }
  for (const auto& [key, text] : node.extra) obj[key] = json::parse(text);
  return obj;
}

ordered_json edge_json(const ProvEdge& edge) {
  ordered_json obj;
  obj["@type"] = edge.kind == EdgeKind::Usage ? "Usage" : "Generation";
  obj["activity"] = edge.activity_id;
  obj["entity"] = edge.entity_id;
  return obj;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::string path, std::string reason)
    : Error(path + ": " + reason), kind_(kind), path_(std::move(path)),
      reason_(std::move(reason)) {}

std::string ParamKey::to_string() const {
  std::string out{kParamPrefix};
  for (const auto& [b, name] : kBases)
    if (b == base) out += name;
  if (modifier) {
    out += '_';
    for (const auto& [m, name] : kModifiers)
      if (m == *modifier) out += name;
  }
  return out;
}

std::optional<ParamKey> ParamKey::from_string(std::string_view key) {
  if (!key.starts_with(kParamPrefix)) return std::nullopt;
  key.remove_prefix(kParamPrefix.size());

  std::string_view base_part = key;
  std::string_view modifier_part;
  if (auto pos = key.find('_'); pos != std::string_view::npos) {
    base_part = key.substr(0, pos);
    modifier_part = key.substr(pos + 1);
    if (modifier_part.empty()) return std::nullopt;
  }

  ParamKey out{};
  bool found = false;
  for (const auto& [b, name] : kBases) {
    if (name == base_part) {
      out.base = b;
      found = true;
      break;
    }
  }
  if (!found) return std::nullopt;

  if (!modifier_part.empty()) {
    found = false;
    for (const auto& [m, name] : kModifiers) {
      if (name == modifier_part) {
        out.modifier = m;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
    if (is_length_specific(*out.modifier) && out.base != ParamBase::Length)
      return std::nullopt;
  }
  return out;
}

const ProvNode* SynthesisProcedure::find_node(std::string_view id) const {
  auto it = std::find_if(nodes.begin(), nodes.end(),
                         [&](const ProvNode& n) { return n.id == id; });
  return it == nodes.end() ? nullptr : &*it;
}

ProcedureDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseErrorKind::Syntax, "$", e.what());
  }

  ProcedureDocument doc;
  if (root.is_object()) {
    // single-procedure file, treated as a one-element array
    doc.procedures.push_back(parse_procedure(root, 0, doc.context_url));
  } else if (root.is_array()) {
    for (std::size_t i = 0; i < root.size(); ++i)
      doc.procedures.push_back(parse_procedure(root[i], i, doc.context_url));
  } else {
    schema_error("$", "top level must be a procedure object or an array of them");
  }
  return doc;
}

std::string serialize_document(const ProcedureDocument& doc, bool with_metadata) {
  ordered_json root = ordered_json::array();
  for (const auto& proc : doc.procedures) {
    ordered_json obj;
    if (with_metadata) {
      obj["@context"] = doc.context_url.value_or(std::string(kDefaultContextUrl));
      obj["@language"] = kDocumentLanguage;
    }
    obj["label"] = proc.label;
    ordered_json graph = ordered_json::array();
    for (const auto& node : proc.nodes) graph.push_back(node_json(node));
    for (const auto& edge : proc.edges) graph.push_back(edge_json(edge));
    obj["@graph"] = std::move(graph);
    for (const auto& [key, text] : proc.extra) obj[key] = json::parse(text);
    root.push_back(std::move(obj));
  }
  return root.dump(2) + "\n";
}

}  // namespace matprov
