#pragma once

// Forcing networks, simple undirected graphs and X-colored graphs.
//
// A forcing network is a palette of colors plus an ordered list of
// color-change rules. The rule `a -> b` lets a vertex colored `a` recolor an
// adjacent vertex colored `b` to `a`. Rule order is significant: engines visit
// rules in exactly the order they were validated with.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcf/error.hpp"

namespace mcf {

using VertexId = std::size_t;

/// A palette member. Valid ids are >= 1; a default-constructed Color (id 0)
/// is a placeholder that no palette contains.
class Color {
 public:
  constexpr Color() = default;
  constexpr explicit Color(int id) : id_(id) {
    if (id < 1) throw Error(Errc::InvalidColor, "color id must be >= 1, got " + std::to_string(id));
  }

  constexpr int id() const noexcept { return id_; }

  friend constexpr auto operator<=>(Color, Color) = default;

 private:
  int id_ = 0;
};

inline std::string to_string(Color c) { return std::to_string(c.id()); }

inline std::vector<Color> make_colors(std::initializer_list<int> ids) {
  std::vector<Color> out;
  out.reserve(ids.size());
  for (int id : ids) out.emplace_back(id);
  return out;
}

struct ColorChangeRule {
  Color source;
  Color target;

  friend constexpr auto operator<=>(const ColorChangeRule&, const ColorChangeRule&) = default;
};

inline std::string to_string(const ColorChangeRule& r) {
  return to_string(r.source) + "->" + to_string(r.target);
}

class ForcingNetwork;
ForcingNetwork validate_network(std::span<const Color> palette,
                                std::span<const ColorChangeRule> rules);

/// Validated (palette, ordered rules). Construct through validate_network().
class ForcingNetwork {
 public:
  /// Sorted, duplicate-free.
  std::span<const Color> palette() const noexcept { return palette_; }
  std::span<const ColorChangeRule> rules() const noexcept { return rules_; }

  bool contains(Color c) const noexcept {
    return std::binary_search(palette_.begin(), palette_.end(), c);
  }

  friend bool operator==(const ForcingNetwork&, const ForcingNetwork&) = default;

 private:
  friend ForcingNetwork validate_network(std::span<const Color>, std::span<const ColorChangeRule>);
  std::vector<Color> palette_;
  std::vector<ColorChangeRule> rules_;
};

inline ForcingNetwork validate_network(std::span<const Color> palette,
                                       std::span<const ColorChangeRule> rules) {
  if (palette.empty()) throw Error(Errc::EmptyPalette, "a forcing network needs at least one color");
  ForcingNetwork net;
  net.palette_.assign(palette.begin(), palette.end());
  std::sort(net.palette_.begin(), net.palette_.end());
  net.palette_.erase(std::unique(net.palette_.begin(), net.palette_.end()), net.palette_.end());
  for (Color c : net.palette_) {
    if (c.id() < 1) throw Error(Errc::InvalidColor, "palette contains an invalid color");
  }

  std::vector<ColorChangeRule> seen;
  for (const auto& r : rules) {
    if (!net.contains(r.source) || !net.contains(r.target)) {
      throw Error(Errc::RuleEndpointOutsidePalette, "rule " + to_string(r) + " uses a color outside the palette");
    }
    if (r.source == r.target) throw Error(Errc::SelfLoopRule, "rule " + to_string(r) + " maps a color to itself");
    if (std::find(seen.begin(), seen.end(), r) != seen.end()) {
      throw Error(Errc::DuplicateRule, "rule " + to_string(r) + " appears more than once");
    }
    seen.push_back(r);
  }
  net.rules_ = std::move(seen);
  return net;
}

inline ForcingNetwork validate_network(std::initializer_list<int> palette,
                                       std::initializer_list<std::pair<int, int>> rules) {
  std::vector<Color> colors = make_colors(palette);
  std::vector<ColorChangeRule> rs;
  for (auto [s, t] : rules) rs.push_back({Color(s), Color(t)});
  return validate_network(colors, rs);
}

/// Palette {1,2,3} with rules 1->2, 2->3, 3->1 in that order.
inline ForcingNetwork cyclic3_network() { return validate_network({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}}); }

/// Palette {1,2,3} with rules 1->2, 2->3, 1->3.
inline ForcingNetwork linear_r1_network() { return validate_network({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}); }

/// True iff the rule digraph on the palette has no directed cycle (Kahn).
inline bool is_acyclic(const ForcingNetwork& network) {
  auto palette = network.palette();
  auto index_of = [&](Color c) {
    return static_cast<std::size_t>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
  };
  std::vector<std::vector<std::size_t>> out(palette.size());
  std::vector<std::size_t> indegree(palette.size(), 0);
  for (const auto& r : network.rules()) {
    out[index_of(r.source)].push_back(index_of(r.target));
    ++indegree[index_of(r.target)];
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < palette.size(); ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t c = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t d : out[c]) {
      if (--indegree[d] == 0) ready.push_back(d);
    }
  }
  return removed == palette.size();
}

struct Edge {
  VertexId u;
  VertexId v;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1 with compressed adjacency.
/// Edges are stored normalized (u < v) and sorted.
class Graph {
 public:
  Graph() = default;

  /// Throws SelfLoopEdge, DuplicateEdge or VertexIndexOutOfRange.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    Graph g;
    g.vertex_count_ = vertex_count;
    g.edges_.reserve(edges.size());
    for (auto e : edges) {
      if (e.u >= vertex_count || e.v >= vertex_count) {
        throw Error(Errc::VertexIndexOutOfRange, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                                     "} on a graph with " + std::to_string(vertex_count) + " vertices");
      }
      if (e.u == e.v) throw Error(Errc::SelfLoopEdge, "self-loop at vertex " + std::to_string(e.u));
      g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
      throw Error(Errc::DuplicateEdge, "edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) +
                                           "} appears more than once");
    }
    g.build_adjacency();
    return g;
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return std::span<const VertexId>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
  }

  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(VertexId a, VertexId b) const noexcept {
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency() {
    offsets_.assign(vertex_count_ + 1, 0);
    for (auto e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto e : edges_) {
      adjacency_[fill[e.u]++] = e.v;
      adjacency_[fill[e.v]++] = e.u;
    }
    for (VertexId v = 0; v < vertex_count_; ++v) {
      std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
    }
  }

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
};

/// Coloring of a graph after some number of steps.
struct StateLabel {
  std::vector<Color> coloring;
  std::size_t step_index = 0;

  friend bool operator==(const StateLabel&, const StateLabel&) = default;
};

/// A simple graph with a total coloring drawn from a network's palette.
struct ColoredGraph {
  Graph graph;
  std::vector<Color> coloring;
  std::vector<Color> palette;

  std::size_t vertex_count() const noexcept { return graph.vertex_count(); }
  StateLabel initial_state() const { return {coloring, 0}; }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;
};

inline void check_coloring(std::size_t vertex_count, std::span<const Color> coloring,
                           std::span<const Color> palette) {
  if (coloring.size() < vertex_count) {
    throw Error(Errc::UncoloredVertex, "vertex " + std::to_string(coloring.size()) + " has no color");
  }
  if (coloring.size() > vertex_count) {
    throw Error(Errc::VertexIndexOutOfRange, "coloring names vertex " + std::to_string(vertex_count) +
                                                 " on a graph with " + std::to_string(vertex_count) + " vertices");
  }
  for (std::size_t v = 0; v < coloring.size(); ++v) {
    if (!std::binary_search(palette.begin(), palette.end(), coloring[v])) {
      throw Error(Errc::ColorOutsidePalette,
                  "vertex " + std::to_string(v) + " has color " + to_string(coloring[v]) + " outside the palette");
    }
  }
}

inline ColoredGraph validate_colored_graph(std::size_t vertex_count, std::span<const Edge> edges,
                                           std::span<const Color> coloring, const ForcingNetwork& network) {
  ColoredGraph cg;
  cg.graph = Graph::from_edges(vertex_count, edges);
  check_coloring(vertex_count, coloring, network.palette());
  cg.coloring.assign(coloring.begin(), coloring.end());
  cg.palette.assign(network.palette().begin(), network.palette().end());
  return cg;
}

inline ColoredGraph validate_colored_graph(const Graph& graph, std::span<const Color> coloring,
                                           const ForcingNetwork& network) {
  check_coloring(graph.vertex_count(), coloring, network.palette());
  return ColoredGraph{graph, {coloring.begin(), coloring.end()}, {network.palette().begin(), network.palette().end()}};
}

/// Vacuously true for the empty graph.
inline bool is_connected(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : graph.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

inline bool is_connected(const ColoredGraph& graph) { return is_connected(graph.graph); }

}  // namespace mcf

template <>
struct std::hash<mcf::Color> {
  std::size_t operator()(mcf::Color c) const noexcept { return std::hash<int>{}(c.id()); }
};
