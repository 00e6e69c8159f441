#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mcf/contraction.hpp"
#include "mcf/core.hpp"

namespace mcf::lab {

struct ColoringFilters {
  bool all_colors_present = false;
  bool contracted = false;  // no edge joins two equal colors
};

inline constexpr std::size_t default_budget = 10'000'000;

/// |palette|^n, saturating at SIZE_MAX.
inline std::size_t coloring_space(std::size_t n, std::size_t palette_size) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (palette_size != 0 && total > std::numeric_limits<std::size_t>::max() / palette_size) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= palette_size;
  }
  return total;
}

/// Streams colorings of `graph` in lexicographic order (vertex 0 most
/// significant, palette order within a position), applying the filters.
///
///   ColoringEnumerator e(graph, palette, filters);
///   while (e.next()) use(e.current());
class ColoringEnumerator {
 public:
  /// Throws BudgetExceeded when |palette|^n > budget.
  ColoringEnumerator(const Graph& graph, std::span<const Color> palette, ColoringFilters filters = {},
                     std::size_t budget = default_budget)
      : graph_(&graph), palette_(palette.begin(), palette.end()), filters_(filters) {
    if (palette_.empty()) throw Error(Errc::EmptyPalette, "cannot enumerate colorings over an empty palette");
    if (coloring_space(graph.vertex_count(), palette_.size()) > budget) {
      throw Error(Errc::BudgetExceeded, std::to_string(palette_.size()) + "^" +
                                            std::to_string(graph.vertex_count()) + " colorings exceed the budget of " +
                                            std::to_string(budget));
    }
    digits_.assign(graph.vertex_count(), 0);
    current_.assign(graph.vertex_count(), palette_.front());
  }

  /// Advances to the next accepted coloring; false when exhausted.
  bool next() {
    while (advance()) {
      if (accepted()) return true;
    }
    return false;
  }

  const std::vector<Color>& current() const noexcept { return current_; }

 private:
  bool advance() {
    if (!started_) {
      started_ = true;
      return true;
    }
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < palette_.size()) {
        current_[i] = palette_[digits_[i]];
        return true;
      }
      digits_[i] = 0;
      current_[i] = palette_.front();
    }
    return false;
  }

  bool accepted() const {
    if (filters_.contracted && !is_properly_colored(*graph_, current_)) return false;
    if (filters_.all_colors_present) {
      for (Color c : palette_) {
        if (std::find(current_.begin(), current_.end(), c) == current_.end()) return false;
      }
    }
    return true;
  }

  const Graph* graph_;
  std::vector<Color> palette_;
  ColoringFilters filters_;
  std::vector<std::size_t> digits_;
  std::vector<Color> current_;
  bool started_ = false;
};

inline std::vector<std::vector<Color>> enumerate_colorings(const Graph& graph, std::span<const Color> palette,
                                                           ColoringFilters filters = {},
                                                           std::size_t budget = default_budget) {
  std::vector<std::vector<Color>> out;
  ColoringEnumerator e(graph, palette, filters, budget);
  while (e.next()) out.push_back(e.current());
  return out;
}

}  // namespace mcf::lab
