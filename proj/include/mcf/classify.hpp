#pragma once

// Closed-form end-state predictors for the 3-cyclic network (rules 1->2,
// 2->3, 3->1 in that order) and for the linear network R1 (1->2, 2->3, 1->3),
// all under forcing with propagation on connected graphs.
//
// Every predictor answers either "all vertices end with color c" or Unknown,
// together with the case that fired.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "mcf/contraction.hpp"
#include "mcf/core.hpp"

namespace mcf {

enum class Basis {
  None,
  Monochrome,
  TwoColorLemma,
  ThreeColorCondition1,
  ThreeColorCondition2,
  ThreeColorCondition3,
  CompleteGraphLemma,
  CompleteBipartiteLemma,
  PathCase1,
  PathCase2,
  PathCase3,
  PathCase4,
  PathCase5,
  LinearNetwork,
};

constexpr std::string_view basis_name(Basis b) noexcept {
  switch (b) {
    case Basis::None: return "none";
    case Basis::Monochrome: return "monochrome fixed point";
    case Basis::TwoColorLemma: return "two-color lemma";
    case Basis::ThreeColorCondition1: return "three-color condition 1";
    case Basis::ThreeColorCondition2: return "three-color condition 2";
    case Basis::ThreeColorCondition3: return "three-color condition 3";
    case Basis::CompleteGraphLemma: return "complete-graph lemma";
    case Basis::CompleteBipartiteLemma: return "complete-bipartite lemma";
    case Basis::PathCase1: return "path theorem case 1";
    case Basis::PathCase2: return "path theorem case 2";
    case Basis::PathCase3: return "path theorem case 3";
    case Basis::PathCase4: return "path theorem case 4";
    case Basis::PathCase5: return "path theorem case 5";
    case Basis::LinearNetwork: return "linear network";
  }
  return "none";
}

struct EndStatePrediction {
  std::optional<Color> color;  // empty means Unknown
  Basis basis = Basis::None;

  bool known() const noexcept { return color.has_value(); }
  static EndStatePrediction monochrome(int c, Basis b) { return {Color(c), b}; }
  static EndStatePrediction unknown() { return {}; }

  friend bool operator==(const EndStatePrediction&, const EndStatePrediction&) = default;
};

inline std::string to_string(const EndStatePrediction& p) {
  if (!p.known()) return "Unknown";
  return "Monochrome " + to_string(*p.color) + " (basis: " + std::string(basis_name(p.basis)) + ")";
}

namespace detail {

/// Bit (c-1) set for each color c in {1,2,3}; throws for any other color.
inline unsigned color_mask(std::span<const Color> coloring) {
  unsigned mask = 0;
  for (Color c : coloring) {
    if (c.id() < 1 || c.id() > 3) {
      throw Error(Errc::ColorOutsidePalette, "color " + to_string(c) + " is not one of 1, 2, 3");
    }
    mask |= 1u << (c.id() - 1);
  }
  return mask;
}

constexpr unsigned all_three = 0b111;

inline void require_connected(const Graph& graph) {
  if (!is_connected(graph)) throw Error(Errc::Disconnected, "classifiers need a connected graph");
}

inline bool is_complete(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

/// Bipartition (part A holds vertex 0) when the graph is connected and
/// complete bipartite with both parts non-empty.
inline std::optional<std::array<std::vector<VertexId>, 2>> complete_bipartition(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || !is_connected(g)) return std::nullopt;
  std::vector<int> side(n, -1);
  std::vector<VertexId> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : g.neighbors(v)) {
      if (side[u] < 0) {
        side[u] = 1 - side[v];
        stack.push_back(u);
      } else if (side[u] == side[v]) {
        return std::nullopt;
      }
    }
  }
  std::array<std::vector<VertexId>, 2> parts;
  for (VertexId v = 0; v < n; ++v) parts[side[v]].push_back(v);
  if (g.edge_count() != parts[0].size() * parts[1].size()) return std::nullopt;
  return parts;
}

/// Vertex sequence when the graph is a path, walked from its smallest endpoint.
inline std::optional<std::vector<VertexId>> path_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0 || g.edge_count() != n - 1 || !is_connected(g)) return std::nullopt;
  if (n == 1) return std::vector<VertexId>{0};
  VertexId start = n;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) == 1 && start == n) start = v;
  }
  std::vector<VertexId> order{start};
  VertexId prev = start;
  VertexId cur = g.neighbors(start)[0];
  while (true) {
    order.push_back(cur);
    auto nb = g.neighbors(cur);
    if (nb.size() == 1) break;
    VertexId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace detail

/// Connected graph colored with at most two of {1,2,3}:
/// {1,2} -> 1, {2,3} -> 2, {1,3} -> 3, single color c -> c.
inline EndStatePrediction classify_two_color(const StateLabel& state, const Graph& graph) {
  detail::check_state(graph, state);
  const unsigned mask = detail::color_mask(state.coloring);
  if (mask == detail::all_three) throw Error(Errc::ThreeColorsPresent, "two-color lemma needs at most two colors");
  detail::require_connected(graph);
  switch (mask) {
    case 0b001: return EndStatePrediction::monochrome(1, Basis::Monochrome);
    case 0b010: return EndStatePrediction::monochrome(2, Basis::Monochrome);
    case 0b100: return EndStatePrediction::monochrome(3, Basis::Monochrome);
    case 0b011: return EndStatePrediction::monochrome(1, Basis::TwoColorLemma);
    case 0b110: return EndStatePrediction::monochrome(2, Basis::TwoColorLemma);
    case 0b101: return EndStatePrediction::monochrome(3, Basis::TwoColorLemma);
    default: return EndStatePrediction::unknown();  // empty graph
  }
}

inline EndStatePrediction classify_two_color(const StateLabel& state, const ColoredGraph& graph) {
  return classify_two_color(state, graph.graph);
}

/// Which of the three sufficient conditions hold on a color-contracted
/// coloring. `third` already includes "the second does not hold".
struct ThreeColorConditions {
  bool first = false;   // every 3 has a 2-neighbor whose neighbors are all 3
  bool second = false;  // every 2 has a 1-neighbor
  bool third = false;   // every 1 has a 3-neighbor whose neighbors are all 1
};

inline ThreeColorConditions three_color_conditions(const Graph& graph, std::span<const Color> coloring) {
  const Color c1(1), c2(2), c3(3);
  auto all_neighbors = [&](VertexId v, Color c) {
    for (VertexId w : graph.neighbors(v)) {
      if (coloring[w] != c) return false;
    }
    return true;
  };
  // Every vertex colored `self` has a neighbor colored `mid`, and when
  // `surround` is set that neighbor is surrounded by `self`.
  auto every_has = [&](Color self, Color mid, bool surround) {
    for (VertexId u = 0; u < graph.vertex_count(); ++u) {
      if (coloring[u] != self) continue;
      bool found = false;
      for (VertexId v : graph.neighbors(u)) {
        if (coloring[v] == mid && (!surround || all_neighbors(v, self))) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  ThreeColorConditions out;
  out.first = every_has(c3, c2, true);
  out.second = every_has(c2, c1, false);
  out.third = !out.second && every_has(c1, c3, true);
  return out;
}

/// Sufficient conditions on a connected, color-contracted graph using all
/// three colors, evaluated in order 1, 2, 3.
inline EndStatePrediction classify_three_color_conditions(const ColoredGraph& graph) {
  if (detail::color_mask(graph.coloring) != detail::all_three) {
    throw Error(Errc::MissingColor, "three-color conditions need every color present");
  }
  if (!is_properly_colored(graph.graph, graph.coloring)) {
    throw Error(Errc::NotContracted, "adjacent vertices share a color");
  }
  detail::require_connected(graph.graph);
  const auto cond = three_color_conditions(graph.graph, graph.coloring);
  if (cond.first) return EndStatePrediction::monochrome(1, Basis::ThreeColorCondition1);
  if (cond.second) return EndStatePrediction::monochrome(3, Basis::ThreeColorCondition2);
  if (cond.third) return EndStatePrediction::monochrome(2, Basis::ThreeColorCondition3);
  return EndStatePrediction::unknown();
}

/// Complete graph with every color present ends all-3.
inline EndStatePrediction classify_complete(const Graph& graph, std::span<const Color> coloring) {
  if (coloring.size() != graph.vertex_count()) throw Error(Errc::DomainMismatch, "coloring size differs from graph");
  if (!detail::is_complete(graph)) throw Error(Errc::NotComplete, "graph is not complete");
  if (detail::color_mask(coloring) != detail::all_three) {
    throw Error(Errc::MissingColor, "complete-graph lemma needs every color present");
  }
  return EndStatePrediction::monochrome(3, Basis::CompleteGraphLemma);
}

/// K_{m,n} with every color present: all-1 when one whole part is colored 3,
/// otherwise all-3.
inline EndStatePrediction classify_complete_bipartite(const Graph& graph, std::span<const VertexId> part_a,
                                                      std::span<const VertexId> part_b,
                                                      std::span<const Color> coloring) {
  const std::size_t n = graph.vertex_count();
  if (coloring.size() != n) throw Error(Errc::DomainMismatch, "coloring size differs from graph");
  std::vector<int> side(n, -1);
  auto mark = [&](std::span<const VertexId> part, int s) {
    for (VertexId v : part) {
      if (v >= n || side[v] >= 0) throw Error(Errc::NotCompleteBipartite, "parts do not partition the vertices");
      side[v] = s;
    }
  };
  mark(part_a, 0);
  mark(part_b, 1);
  if (part_a.empty() || part_b.empty() || std::find(side.begin(), side.end(), -1) != side.end()) {
    throw Error(Errc::NotCompleteBipartite, "parts do not partition the vertices");
  }
  for (auto e : graph.edges()) {
    if (side[e.u] == side[e.v]) throw Error(Errc::NotCompleteBipartite, "edge inside a part");
  }
  if (graph.edge_count() != part_a.size() * part_b.size()) {
    throw Error(Errc::NotCompleteBipartite, "missing edges between the parts");
  }
  if (detail::color_mask(coloring) != detail::all_three) {
    throw Error(Errc::MissingColor, "complete-bipartite lemma needs every color present");
  }
  auto all_three_colored = [&](std::span<const VertexId> part) {
    return std::all_of(part.begin(), part.end(), [&](VertexId v) { return coloring[v] == Color(3); });
  };
  if (all_three_colored(part_a) || all_three_colored(part_b)) {
    return EndStatePrediction::monochrome(1, Basis::CompleteBipartiteLemma);
  }
  return EndStatePrediction::monochrome(3, Basis::CompleteBipartiteLemma);
}

/// Color-contracted path sequences of length 1..5.
inline EndStatePrediction classify_path(std::span<const Color> sequence) {
  const std::size_t k = sequence.size();
  if (k == 0) throw Error(Errc::InvalidParams, "empty path");
  if (k > 5) throw Error(Errc::TooLong, "contracted path has " + std::to_string(k) + " vertices, at most 5 supported");
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (sequence[i] == sequence[i + 1]) throw Error(Errc::NotContracted, "adjacent path entries share a color");
  }
  const unsigned mask = detail::color_mask(sequence);
  if (mask != detail::all_three) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
    return classify_two_color(StateLabel{{sequence.begin(), sequence.end()}, 0}, Graph::from_edges(k, edges));
  }

  std::string s;
  for (Color c : sequence) s.push_back(static_cast<char>('0' + c.id()));
  const std::string r(s.rbegin(), s.rend());
  auto count = [&](char c) { return std::count(s.begin(), s.end(), c); };
  auto starts = [](const std::string& str, std::string_view prefix) { return str.rfind(prefix, 0) == 0; };
  auto has_1_neighbor = [&](std::size_t i) {
    return (i > 0 && s[i - 1] == '1') || (i + 1 < k && s[i + 1] == '1');
  };
  bool every_2_next_to_1 = true;
  for (std::size_t i = 0; i < k; ++i) {
    if (s[i] == '2' && !has_1_neighbor(i)) every_2_next_to_1 = false;
  }

  if (s.find("323") != std::string::npos) {
    return EndStatePrediction::monochrome(count('3') == 2 ? 1 : 2, Basis::PathCase1);
  }
  // The single-131 branch only holds when some 2 is not next to a 1; otherwise
  // every 2 is absorbed by 1 first and the path ends all-3 (case 3).
  if (s.find("131") != std::string::npos && !(count('1') == 2 && every_2_next_to_1)) {
    return EndStatePrediction::monochrome(count('1') == 2 ? 2 : 3, Basis::PathCase2);
  }
  if (every_2_next_to_1) return EndStatePrediction::monochrome(3, Basis::PathCase3);
  if (starts(s, "231") || starts(r, "231")) {
    if (s == "23132") return EndStatePrediction::monochrome(1, Basis::PathCase4);
    return EndStatePrediction::monochrome(count('3') == 1 ? 1 : 2, Basis::PathCase4);
  }
  if (s == "23213" || r == "23213") return EndStatePrediction::monochrome(2, Basis::PathCase5);
  return EndStatePrediction::monochrome(1, Basis::PathCase5);
}

/// Network R1 on a connected graph: the smallest color present wins.
inline EndStatePrediction classify_linear_r1(const Graph& graph, std::span<const Color> coloring) {
  if (coloring.size() != graph.vertex_count()) throw Error(Errc::DomainMismatch, "coloring size differs from graph");
  detail::require_connected(graph);
  const unsigned mask = detail::color_mask(coloring);
  if (mask & 0b001) return EndStatePrediction::monochrome(1, Basis::LinearNetwork);
  if (mask & 0b010) return EndStatePrediction::monochrome(2, Basis::LinearNetwork);
  if (mask & 0b100) return EndStatePrediction::monochrome(3, Basis::LinearNetwork);
  return EndStatePrediction::unknown();
}

enum class NetworkKind { Cyclic3, LinearR1 };

/// Renaming `canonical_to_actual[c-1]` maps canonical color c to a palette
/// color such that the network equals the renamed canonical network.
struct NetworkMatch {
  NetworkKind kind;
  std::array<Color, 3> canonical_to_actual;
};

/// Brute force over the 3! palette bijections. The 3-cyclic match respects
/// rule order; R1 is order-insensitive.
inline std::optional<NetworkMatch> match_network(const ForcingNetwork& network) {
  auto palette = network.palette();
  if (palette.size() != 3 || network.rules().size() != 3) return std::nullopt;
  std::array<std::size_t, 3> perm{0, 1, 2};
  auto rename = [&](const std::array<std::size_t, 3>& p, int s, int t) {
    return ColorChangeRule{palette[p[s - 1]], palette[p[t - 1]]};
  };
  auto rules = network.rules();
  do {
    std::array<Color, 3> sigma{palette[perm[0]], palette[perm[1]], palette[perm[2]]};
    std::array<ColorChangeRule, 3> cyc{rename(perm, 1, 2), rename(perm, 2, 3), rename(perm, 3, 1)};
    if (std::equal(cyc.begin(), cyc.end(), rules.begin())) return NetworkMatch{NetworkKind::Cyclic3, sigma};
    std::array<ColorChangeRule, 3> lin{rename(perm, 1, 2), rename(perm, 2, 3), rename(perm, 1, 3)};
    if (std::is_permutation(lin.begin(), lin.end(), rules.begin())) return NetworkMatch{NetworkKind::LinearR1, sigma};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

namespace detail {

inline EndStatePrediction predict_cyclic3(const ColoredGraph& g) {
  const auto& coloring = g.coloring;
  if (g.vertex_count() == 0 || !is_connected(g.graph)) return EndStatePrediction::unknown();
  if (color_mask(coloring) != all_three) return classify_two_color(g.initial_state(), g.graph);
  if (is_complete(g.graph)) return classify_complete(g.graph, coloring);
  if (auto parts = complete_bipartition(g.graph)) {
    return classify_complete_bipartite(g.graph, (*parts)[0], (*parts)[1], coloring);
  }

  const ContractionMap map = color_contract(g);
  const ColoredGraph& q = map.quotient;
  if (is_complete(q.graph)) return classify_complete(q.graph, q.coloring);
  if (auto parts = complete_bipartition(q.graph)) {
    return classify_complete_bipartite(q.graph, (*parts)[0], (*parts)[1], q.coloring);
  }
  if (auto order = path_order(q.graph); order && order->size() <= 5) {
    std::vector<Color> seq;
    for (VertexId v : *order) seq.push_back(q.coloring[v]);
    return classify_path(seq);
  }
  return classify_three_color_conditions(q);
}

}  // namespace detail

/// Dispatches to the classifiers for networks isomorphic (by color renaming)
/// to the 3-cyclic network or to R1. Throws UnsupportedNetwork otherwise.
/// Disconnected graphs yield Unknown.
inline EndStatePrediction predict(const ColoredGraph& graph, const ForcingNetwork& network) {
  const auto match = match_network(network);
  if (!match) throw Error(Errc::UnsupportedNetwork, "network is neither 3-cyclic nor R1 up to color renaming");
  check_coloring(graph.vertex_count(), graph.coloring, network.palette());

  ColoredGraph canonical = graph;
  for (Color& c : canonical.coloring) {
    auto it = std::find(match->canonical_to_actual.begin(), match->canonical_to_actual.end(), c);
    c = Color(static_cast<int>(it - match->canonical_to_actual.begin()) + 1);
  }
  canonical.palette = make_colors({1, 2, 3});

  EndStatePrediction p;
  if (match->kind == NetworkKind::LinearR1) {
    p = is_connected(canonical.graph) && canonical.vertex_count() > 0
            ? classify_linear_r1(canonical.graph, canonical.coloring)
            : EndStatePrediction::unknown();
  } else {
    p = detail::predict_cyclic3(canonical);
  }
  if (p.color) p.color = match->canonical_to_actual[p.color->id() - 1];
  return p;
}

}  // namespace mcf
