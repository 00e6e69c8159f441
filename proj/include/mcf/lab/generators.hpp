#pragma once

// Graph families, labeled-graph enumeration and seeded random instances.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <string_view>
#include <vector>

#include "mcf/core.hpp"

namespace mcf::lab {

enum class Family { Path, Cycle, Complete, CompleteBipartite, Star, RandomTree, RandomConnected };

inline std::optional<Family> parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "complete_bipartite") return Family::CompleteBipartite;
  if (name == "star") return Family::Star;
  if (name == "random_tree") return Family::RandomTree;
  if (name == "random_connected") return Family::RandomConnected;
  return std::nullopt;
}

struct FamilyParams {
  std::size_t n = 0;             // vertex count (second part size for complete_bipartite)
  std::size_t m = 0;             // first part size for complete_bipartite
  double edge_probability = 0.3;  // random_connected: chance of each non-tree edge
};

using Rng = std::mt19937_64;

/// Independent stream for instance `index` of a corpus seeded with `seed`.
inline Rng instance_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({n - 1, 0});
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph::from_edges(n, edges);
}

/// Part A is 0..m-1, part B is m..m+n-1.
inline Graph complete_bipartite_graph(std::size_t m, std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) edges.push_back({i, m + j});
  }
  return Graph::from_edges(m + n, edges);
}

/// Center 0 joined to leaves 1..n-1.
inline Graph star_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph::from_edges(n, edges);
}

/// Uniform labeled tree via a random Pruefer sequence.
inline Graph random_tree(std::size_t n, Rng& rng) {
  if (n <= 1) return Graph::from_edges(n, {});
  if (n == 2) return path_graph(2);
  std::vector<std::size_t> pruefer(n - 2);
  for (auto& x : pruefer) x = uniform_index(rng, 0, n - 1);
  std::vector<std::size_t> degree(n, 1);
  for (auto x : pruefer) ++degree[x];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (auto x : pruefer) {
    std::size_t leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, x});
    if (--degree[x] == 1) leaves.push(x);
  }
  std::size_t a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Graph::from_edges(n, edges);
}

/// Random spanning tree plus each remaining pair with `edge_probability`.
inline Graph random_connected(std::size_t n, double edge_probability, Rng& rng) {
  Graph tree = random_tree(n, rng);
  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  std::bernoulli_distribution coin(edge_probability);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!tree.has_edge(i, j) && coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

/// Deterministic given (family, params, seed). Random families require a
/// seed. Throws InvalidParams.
inline Graph generate_family(Family family, const FamilyParams& params, std::optional<std::uint64_t> seed = {}) {
  const std::size_t n = params.n;
  auto need = [](bool ok, const char* what) {
    if (!ok) throw Error(Errc::InvalidParams, what);
  };
  const bool random = family == Family::RandomTree || family == Family::RandomConnected;
  need(!random || seed.has_value(), "random families need an explicit seed");
  Rng rng = instance_rng(seed.value_or(0), 0);
  switch (family) {
    case Family::Path: need(n >= 1, "path needs n >= 1"); return path_graph(n);
    case Family::Cycle: need(n >= 3, "cycle needs n >= 3"); return cycle_graph(n);
    case Family::Complete: need(n >= 1, "complete graph needs n >= 1"); return complete_graph(n);
    case Family::CompleteBipartite:
      need(params.m >= 1 && n >= 1, "complete bipartite needs m, n >= 1");
      return complete_bipartite_graph(params.m, n);
    case Family::Star: need(n >= 2, "star needs n >= 2"); return star_graph(n);
    case Family::RandomTree: need(n >= 1, "random tree needs n >= 1"); return random_tree(n, rng);
    case Family::RandomConnected:
      need(n >= 1, "random connected graph needs n >= 1");
      need(params.edge_probability >= 0.0 && params.edge_probability <= 1.0, "edge probability must be in [0,1]");
      return random_connected(n, params.edge_probability, rng);
  }
  throw Error(Errc::InvalidParams, "unknown family");
}

/// All connected labeled graphs on n vertices, ordered by edge bitmask over
/// the pairs (0,1), (0,2), ..., (n-2,n-1).
inline std::vector<Graph> connected_graphs(std::size_t n) {
  if (n > 7) throw Error(Errc::BudgetExceeded, "labeled graph enumeration is limited to n <= 7");
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  std::vector<Graph> out;
  std::vector<Edge> edges;
  const std::uint64_t masks = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n) continue;
    edges.clear();
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1) edges.push_back(pairs[b]);
    }
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

/// All labeled trees on n vertices, in the same order as connected_graphs().
inline std::vector<Graph> labeled_trees(std::size_t n) {
  std::vector<Graph> out;
  for (auto& g : connected_graphs(n)) {
    if (g.edge_count() + 1 == n) out.push_back(std::move(g));
  }
  return out;
}

/// Palette {1..k} for k uniform in [2, max_colors], each ordered pair kept
/// with probability 1/2, rules shuffled.
inline ForcingNetwork random_network(std::size_t max_colors, Rng& rng) {
  const std::size_t k = uniform_index(rng, 2, std::max<std::size_t>(2, max_colors));
  std::vector<Color> palette;
  for (std::size_t c = 1; c <= k; ++c) palette.emplace_back(static_cast<int>(c));
  std::vector<ColorChangeRule> rules;
  std::bernoulli_distribution coin(0.5);
  for (Color a : palette) {
    for (Color b : palette) {
      if (a != b && coin(rng)) rules.push_back({a, b});
    }
  }
  std::shuffle(rules.begin(), rules.end(), rng);
  return validate_network(palette, rules);
}

/// Like random_network() but every rule points forward in a random
/// topological order of the palette.
inline ForcingNetwork random_acyclic_network(std::size_t max_colors, Rng& rng) {
  const std::size_t k = uniform_index(rng, 2, std::max<std::size_t>(2, max_colors));
  std::vector<Color> order;
  for (std::size_t c = 1; c <= k; ++c) order.emplace_back(static_cast<int>(c));
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<ColorChangeRule> rules;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (coin(rng)) rules.push_back({order[i], order[j]});
    }
  }
  std::shuffle(rules.begin(), rules.end(), rng);
  return validate_network(order, rules);
}

inline std::vector<Color> random_coloring(std::size_t n, std::span<const Color> palette, Rng& rng) {
  std::vector<Color> out(n);
  for (auto& c : out) c = palette[uniform_index(rng, 0, palette.size() - 1)];
  return out;
}

/// Maximum shortest-path distance; 0 for a single vertex. Throws Disconnected.
inline std::size_t graph_diameter(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::size_t diameter = 0;
  std::vector<std::size_t> dist(n);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), unseen);
    queue.assign(1, s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId v = queue[head];
      for (VertexId u : graph.neighbors(v)) {
        if (dist[u] == unseen) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    if (queue.size() != n) throw Error(Errc::Disconnected, "diameter of a disconnected graph");
    diameter = std::max(diameter, dist[queue.back()]);
  }
  return diameter;
}

inline std::size_t graph_diameter(const ColoredGraph& graph) { return graph_diameter(graph.graph); }

}  // namespace mcf::lab
