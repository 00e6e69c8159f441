#pragma once

// Search for colored graphs on n vertices whose propagation run needs exactly
// n-1 propagating forcing steps, the most the termination bound allows.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mcf/engine.hpp"
#include "mcf/lab/enumerate.hpp"
#include "mcf/lab/generators.hpp"

namespace mcf::lab {

struct ExtremalInstance {
  Graph graph;
  std::vector<Color> coloring;
  std::size_t pfs_count = 0;

  friend bool operator==(const ExtremalInstance&, const ExtremalInstance&) = default;
};

struct ExtremalResult {
  std::vector<ExtremalInstance> instances;  // canonical order, no duplicates
  bool exhaustive = true;                   // false: sampled because the budget was too small
  std::size_t instances_checked = 0;
};

/// Exhaustive over every connected labeled graph and coloring when n <= 6 and
/// the instance count fits `budget`; otherwise samples `budget` seeded random
/// connected instances and flags the result as partial.
inline ExtremalResult search_extremal(std::size_t n, const ForcingNetwork& network,
                                      std::size_t budget = default_budget, std::uint64_t seed = 1) {
  if (n == 0) throw Error(Errc::InvalidParams, "extremal search needs n >= 1");
  ExtremalResult result;
  const std::size_t target = n - 1;
  auto consider = [&](const Graph& g, std::span<const Color> coloring) {
    ++result.instances_checked;
    auto t = run_with_propagation(g, coloring, network, {.limit = std::nullopt, .record_events = false});
    if (*t.pfs_count == target) result.instances.push_back({g, {coloring.begin(), coloring.end()}, *t.pfs_count});
  };

  const std::size_t per_graph = coloring_space(n, network.palette().size());
  if (n <= 6) {
    auto graphs = connected_graphs(n);
    if (per_graph <= budget && graphs.size() <= budget / per_graph) {
      for (const auto& g : graphs) {
        ColoringEnumerator e(g, network.palette(), {}, budget);
        while (e.next()) consider(g, e.current());
      }
      return result;
    }
  }

  result.exhaustive = false;
  for (std::size_t i = 0; i < budget; ++i) {
    Rng rng = instance_rng(seed, i);
    Graph g = random_connected(n, 0.3, rng);
    consider(g, random_coloring(n, network.palette(), rng));
  }
  std::sort(result.instances.begin(), result.instances.end(), [&](const auto& a, const auto& b) {
    auto ea = a.graph.edges();
    auto eb = b.graph.edges();
    if (!std::equal(ea.begin(), ea.end(), eb.begin(), eb.end())) {
      return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
    }
    return a.coloring < b.coloring;
  });
  result.instances.erase(std::unique(result.instances.begin(), result.instances.end()), result.instances.end());
  return result;
}

}  // namespace mcf::lab
