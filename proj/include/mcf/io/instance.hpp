#pragma once

// Instance documents: a forcing network plus a named, colored graph.
//
//   {
//     "palette":  [1, 2, 3],
//     "rules":    [[1, 2], [2, 3], [3, 1]],
//     "vertices": ["a", "b", "c"],
//     "edges":    [["a", "b"], ["b", "c"]],
//     "coloring": {"a": 1, "b": 2, "c": 3}
//   }
//
// Vertex names map to dense indices in `vertices` order. Output preserves that
// order everywhere.

#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mcf/core.hpp"

namespace mcf::io {

using Json = nlohmann::ordered_json;

struct InstanceDocument {
  std::vector<int> palette;
  std::vector<std::pair<int, int>> rules;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, int>> coloring;  // in document order

  friend bool operator==(const InstanceDocument&, const InstanceDocument&) = default;
};

/// A validated instance: network, colored graph and the vertex names.
struct Instance {
  ForcingNetwork network;
  ColoredGraph graph;
  std::vector<std::string> names;
};

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

inline const Json& field(const Json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) parse_fail(std::string("missing field '") + name + "'");
  return *it;
}

inline int as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where + ": expected an integer");
  return v.get<int>();
}

inline std::string as_string(const Json& v, const std::string& where) {
  if (!v.is_string()) parse_fail(where + ": expected a string");
  return v.get<std::string>();
}

inline std::pair<Json, Json> as_pair(const Json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) parse_fail(where + ": expected a two-element array");
  return {v[0], v[1]};
}

}  // namespace detail

inline InstanceDocument document_from_json(const Json& doc) {
  using namespace detail;
  if (!doc.is_object()) parse_fail("instance document must be an object");
  InstanceDocument out;

  const Json& palette = field(doc, "palette");
  if (!palette.is_array()) parse_fail("palette: expected an array");
  for (const auto& c : palette) out.palette.push_back(as_int(c, "palette"));

  const Json& rules = field(doc, "rules");
  if (!rules.is_array()) parse_fail("rules: expected an array");
  for (const auto& r : rules) {
    auto [s, t] = as_pair(r, "rules");
    out.rules.emplace_back(as_int(s, "rules"), as_int(t, "rules"));
  }

  const Json& vertices = field(doc, "vertices");
  if (!vertices.is_array()) parse_fail("vertices: expected an array");
  for (const auto& v : vertices) out.vertices.push_back(as_string(v, "vertices"));

  const Json& edges = field(doc, "edges");
  if (!edges.is_array()) parse_fail("edges: expected an array");
  for (const auto& e : edges) {
    auto [a, b] = as_pair(e, "edges");
    out.edges.emplace_back(as_string(a, "edges"), as_string(b, "edges"));
  }

  const Json& coloring = field(doc, "coloring");
  if (!coloring.is_object()) parse_fail("coloring: expected an object mapping vertex names to colors");
  for (const auto& [name, color] : coloring.items()) out.coloring.emplace_back(name, as_int(color, "coloring." + name));
  return out;
}

inline InstanceDocument parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return document_from_json(doc);
}

inline Json to_json(const InstanceDocument& doc) {
  Json out = Json::object();
  out["palette"] = doc.palette;
  out["rules"] = Json::array();
  for (auto [s, t] : doc.rules) out["rules"].push_back({s, t});
  out["vertices"] = doc.vertices;
  out["edges"] = Json::array();
  for (const auto& [a, b] : doc.edges) out["edges"].push_back({a, b});
  out["coloring"] = Json::object();
  for (const auto& [name, c] : doc.coloring) out["coloring"][name] = c;
  return out;
}

inline std::string serialize_instance(const InstanceDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline ForcingNetwork network_from(std::span<const int> palette, std::span<const std::pair<int, int>> rules) {
  std::vector<Color> colors;
  for (int c : palette) colors.emplace_back(c);
  std::vector<ColorChangeRule> rs;
  for (auto [s, t] : rules) rs.push_back({Color(s), Color(t)});
  return validate_network(colors, rs);
}

/// Maps names to indices and validates. Vertex names must be unique; edges and
/// coloring entries must name declared vertices.
inline Instance bind(const InstanceDocument& doc) {
  Instance inst{network_from(doc.palette, doc.rules), {}, doc.vertices};
  std::unordered_map<std::string, VertexId> index;
  for (VertexId v = 0; v < doc.vertices.size(); ++v) {
    if (!index.emplace(doc.vertices[v], v).second) {
      throw Error(Errc::ParseError, "vertex name '" + doc.vertices[v] + "' is declared twice");
    }
  }
  auto lookup = [&](const std::string& name, const char* where) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(Errc::ParseError, std::string(where) + " names unknown vertex '" + name + "'");
    return it->second;
  };
  std::vector<Edge> edges;
  for (const auto& [a, b] : doc.edges) edges.push_back({lookup(a, "edge"), lookup(b, "edge")});

  std::vector<Color> coloring(doc.vertices.size());
  std::vector<char> colored(doc.vertices.size(), 0);
  for (const auto& [name, c] : doc.coloring) {
    VertexId v = lookup(name, "coloring");
    if (colored[v]) throw Error(Errc::ParseError, "vertex '" + name + "' is colored twice");
    colored[v] = 1;
    coloring[v] = Color(c);
  }
  for (VertexId v = 0; v < colored.size(); ++v) {
    if (!colored[v]) throw Error(Errc::UncoloredVertex, "vertex '" + doc.vertices[v] + "' has no color");
  }
  inst.graph = validate_colored_graph(doc.vertices.size(), edges, coloring, inst.network);
  return inst;
}

/// Document for a colored graph, with the given vertex names.
inline InstanceDocument to_document(const ForcingNetwork& network, const ColoredGraph& graph,
                                    std::span<const std::string> names) {
  InstanceDocument doc;
  for (Color c : network.palette()) doc.palette.push_back(c.id());
  for (const auto& r : network.rules()) doc.rules.emplace_back(r.source.id(), r.target.id());
  doc.vertices.assign(names.begin(), names.end());
  for (auto e : graph.graph.edges()) doc.edges.emplace_back(names[e.u], names[e.v]);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) doc.coloring.emplace_back(names[v], graph.coloring[v].id());
  return doc;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace mcf::io
