#pragma once

// Color-contracted graph: the quotient of a colored graph by its maximal
// connected monochromatic components.

#include <vector>

#include "mcf/core.hpp"
#include "mcf/engine.hpp"

namespace mcf {

struct ContractionMap {
  std::vector<std::size_t> component_of;         // original vertex -> component
  std::vector<std::vector<VertexId>> components;  // ascending vertex lists
  ColoredGraph quotient;

  friend bool operator==(const ContractionMap&, const ContractionMap&) = default;
};

/// Components are numbered by their smallest original vertex, ascending, so
/// the quotient is canonical.
inline ContractionMap color_contract(const ColoredGraph& graph) {
  const std::size_t n = graph.vertex_count();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  ContractionMap map;
  map.component_of.assign(n, unassigned);

  std::vector<VertexId> stack;
  for (VertexId start = 0; start < n; ++start) {
    if (map.component_of[start] != unassigned) continue;
    const std::size_t id = map.components.size();
    const Color color = graph.coloring[start];
    std::vector<VertexId> members;
    map.component_of[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (VertexId u : graph.graph.neighbors(v)) {
        if (map.component_of[u] == unassigned && graph.coloring[u] == color) {
          map.component_of[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    map.components.push_back(std::move(members));
  }

  std::vector<Edge> quotient_edges;
  for (auto e : graph.graph.edges()) {
    std::size_t a = map.component_of[e.u];
    std::size_t b = map.component_of[e.v];
    if (a == b) continue;
    quotient_edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(quotient_edges.begin(), quotient_edges.end());
  quotient_edges.erase(std::unique(quotient_edges.begin(), quotient_edges.end()), quotient_edges.end());

  map.quotient.graph = Graph::from_edges(map.components.size(), quotient_edges);
  map.quotient.coloring.reserve(map.components.size());
  for (const auto& comp : map.components) map.quotient.coloring.push_back(graph.coloring[comp.front()]);
  map.quotient.palette = graph.palette;
  return map;
}

/// Colors every original vertex with the color of its component in
/// `quotient_end`. Throws DomainMismatch on a size mismatch.
inline StateLabel lift_end_state(const StateLabel& quotient_end, const ContractionMap& map) {
  if (quotient_end.coloring.size() != map.components.size()) {
    throw Error(Errc::DomainMismatch, "quotient state colors " + std::to_string(quotient_end.coloring.size()) +
                                          " vertices, quotient has " + std::to_string(map.components.size()));
  }
  StateLabel lifted;
  lifted.step_index = quotient_end.step_index;
  lifted.coloring.reserve(map.component_of.size());
  for (std::size_t comp : map.component_of) lifted.coloring.push_back(quotient_end.coloring[comp]);
  return lifted;
}

/// True iff no edge joins two vertices of the same color.
inline bool is_properly_colored(const Graph& graph, std::span<const Color> coloring) {
  for (auto e : graph.edges()) {
    if (coloring[e.u] == coloring[e.v]) return false;
  }
  return true;
}

}  // namespace mcf
