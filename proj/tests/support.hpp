#pragma once

// Conversions between library types and the oracle's plain representations.

#include <vector>

#include "mcf/mcf.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Matrix to_matrix(const mcf::Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto e : g.edges()) edges.emplace_back(e.u, e.v);
  return oracle::matrix(g.vertex_count(), edges);
}

inline oracle::Coloring ints(std::span<const mcf::Color> c) {
  oracle::Coloring out;
  for (auto x : c) out.push_back(x.id());
  return out;
}

inline std::vector<oracle::Rule> rules(const mcf::ForcingNetwork& net) {
  std::vector<oracle::Rule> out;
  for (const auto& r : net.rules()) out.emplace_back(r.source.id(), r.target.id());
  return out;
}

inline std::vector<mcf::Color> colors(const std::vector<int>& ids) {
  std::vector<mcf::Color> out;
  for (int c : ids) out.emplace_back(c);
  return out;
}

// Digits of a string like "2312321" as colors.
inline std::vector<mcf::Color> seq(std::string_view digits) {
  std::vector<mcf::Color> out;
  for (char d : digits) out.emplace_back(d - '0');
  return out;
}

inline mcf::ColoredGraph colored(const mcf::Graph& g, const std::vector<mcf::Color>& c, const mcf::ForcingNetwork& net) {
  return mcf::validate_colored_graph(g, c, net);
}

}  // namespace support
