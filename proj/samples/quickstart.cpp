// Run the 3-cyclic network on a six-cycle, contract a graph, and ask the
// classifier for an end state.

#include <iostream>

#include "mcf/mcf.hpp"

int main() {
  const auto net = mcf::cyclic3_network();
  const std::vector<mcf::Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
  const auto g = mcf::validate_colored_graph(6, edges, mcf::make_colors({1, 3, 3, 2, 2, 1}), net);

  const auto trace = mcf::run_with_propagation(g, net);
  for (const auto& e : trace.events) {
    std::cout << "FS " << e.fs_index << " (PFS " << *e.pfs_index << ") " << mcf::to_string(e.rule) << ": "
              << mcf::lab::coloring_string(mcf::replay(trace, e.fs_index)) << "\n";
  }
  std::cout << "fs_count=" << trace.fs_count << " pfs_count=" << *trace.pfs_count << "\n";

  const auto map = mcf::color_contract(g);
  std::cout << "quotient has " << map.quotient.vertex_count() << " vertices\n";

  std::cout << mcf::to_string(mcf::predict(g, net)) << "\n";
}
