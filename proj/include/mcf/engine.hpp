#pragma once

// Forcing dynamics.
//
// One forcing step (FS) applies a single rule as a synchronous round: every
// vertex colored `rule.target` with at least one neighbor colored
// `rule.source` is recolored to `rule.source`, all at once. A propagating
// forcing step (PFS) repeats rounds of the same rule until a round recolors
// nothing.
//
// Step counting differs by mode:
//  * with propagation, a rule that cannot act is skipped and not counted;
//  * without propagation, every rule visit is one FS, including no-ops.
// Both modes stop after |R| consecutive rule visits that recolor nothing.

#include <cstring>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "mcf/core.hpp"

namespace mcf {

enum class Mode { Propagation, NonPropagation };

struct RoundEvent {
  ColorChangeRule rule;
  std::vector<VertexId> recolored;  // ascending
  std::size_t fs_index = 0;         // 1-based
  std::optional<std::size_t> pfs_index;

  friend bool operator==(const RoundEvent&, const RoundEvent&) = default;
};

struct Terminated {
  StateLabel final_state;
  friend bool operator==(const Terminated&, const Terminated&) = default;
};

/// The (coloring, next rule position) pair after `first_index` rule visits
/// equals the pair after `repeat_index` visits.
struct NonTerminating {
  std::size_t first_index = 0;
  std::size_t repeat_index = 0;
  friend bool operator==(const NonTerminating&, const NonTerminating&) = default;
};

struct ForcingTrace {
  Mode mode = Mode::Propagation;
  StateLabel initial;
  std::vector<RoundEvent> events;  // empty when recording was disabled
  std::variant<Terminated, NonTerminating> outcome;
  std::size_t fs_count = 0;
  std::optional<std::size_t> pfs_count;     // propagation mode only
  std::vector<std::size_t> rounds_per_pfs;  // propagation mode only

  bool terminated() const noexcept { return std::holds_alternative<Terminated>(outcome); }

  friend bool operator==(const ForcingTrace&, const ForcingTrace&) = default;
};

struct RunOptions {
  /// Propagation mode: maximum PFS count. Non-propagation mode: maximum
  /// number of counted FS.
  std::optional<std::size_t> limit;
  bool record_events = true;
};

namespace detail {

/// Applies one synchronous round in place; `recolored` receives the changed
/// vertices in ascending order.
inline void apply_round(std::vector<Color>& coloring, const Graph& graph, ColorChangeRule rule,
                        std::vector<VertexId>& recolored) {
  recolored.clear();
  const std::size_t n = graph.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    if (coloring[v] != rule.target) continue;
    for (VertexId u : graph.neighbors(v)) {
      if (coloring[u] == rule.source) {
        recolored.push_back(v);
        break;
      }
    }
  }
  for (VertexId v : recolored) coloring[v] = rule.source;
}

inline void check_state(const Graph& graph, const StateLabel& state) {
  if (state.coloring.size() != graph.vertex_count()) {
    throw Error(Errc::DomainMismatch, "state colors " + std::to_string(state.coloring.size()) +
                                          " vertices, graph has " + std::to_string(graph.vertex_count()));
  }
}

inline std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

inline std::string state_key(const std::vector<Color>& coloring, std::size_t position) {
  std::string key;
  key.resize((coloring.size() + 1) * sizeof(int));
  char* out = key.data();
  for (Color c : coloring) {
    int id = c.id();
    std::memcpy(out, &id, sizeof id);
    out += sizeof id;
  }
  int pos = static_cast<int>(position);
  std::memcpy(out, &pos, sizeof pos);
  return key;
}

}  // namespace detail

struct RoundResult {
  StateLabel state;
  std::vector<VertexId> recolored;
};

/// One synchronous round of `rule`. step_index advances only if something
/// changed.
inline RoundResult forcing_round(const StateLabel& state, const Graph& graph, ColorChangeRule rule) {
  detail::check_state(graph, state);
  RoundResult result{state, {}};
  detail::apply_round(result.state.coloring, graph, rule, result.recolored);
  if (!result.recolored.empty()) ++result.state.step_index;
  return result;
}

inline RoundResult forcing_round(const StateLabel& state, const ColoredGraph& graph, ColorChangeRule rule) {
  return forcing_round(state, graph.graph, rule);
}

struct PropagatingResult {
  StateLabel state;
  std::vector<std::vector<VertexId>> rounds;  // non-empty recolored sets, in order
};

/// Rounds of `rule` until one recolors nothing. step_index advances by one
/// iff at least one round acted.
inline PropagatingResult propagating_step(const StateLabel& state, const Graph& graph, ColorChangeRule rule) {
  detail::check_state(graph, state);
  PropagatingResult result{state, {}};
  std::vector<VertexId> recolored;
  for (;;) {
    detail::apply_round(result.state.coloring, graph, rule, recolored);
    if (recolored.empty()) break;
    result.rounds.push_back(recolored);
  }
  if (!result.rounds.empty()) ++result.state.step_index;
  return result;
}

inline PropagatingResult propagating_step(const StateLabel& state, const ColoredGraph& graph, ColorChangeRule rule) {
  return propagating_step(state, graph.graph, rule);
}

/// Runs with propagation; always terminates (at most n-1 PFS). `options.limit`
/// caps the PFS count and raises LimitExceeded when exceeded.
inline ForcingTrace run_with_propagation(const Graph& graph, std::span<const Color> initial,
                                         const ForcingNetwork& network, const RunOptions& options = {}) {
  ForcingTrace trace;
  trace.mode = Mode::Propagation;
  trace.initial = StateLabel{{initial.begin(), initial.end()}, 0};
  detail::check_state(graph, trace.initial);

  std::vector<Color> coloring(initial.begin(), initial.end());
  std::vector<VertexId> recolored;
  const auto rules = network.rules();
  std::size_t fs = 0;
  std::size_t pfs = 0;
  std::size_t idle = 0;
  for (std::size_t pos = 0; !rules.empty() && idle < rules.size(); pos = (pos + 1) % rules.size()) {
    const ColorChangeRule rule = rules[pos];
    std::size_t rounds = 0;
    for (;;) {
      detail::apply_round(coloring, graph, rule, recolored);
      if (recolored.empty()) break;
      ++rounds;
      ++fs;
      if (options.record_events) trace.events.push_back({rule, recolored, fs, pfs + 1});
    }
    if (rounds == 0) {
      ++idle;
      continue;
    }
    ++pfs;
    if (options.limit && pfs > *options.limit) {
      throw Error(Errc::LimitExceeded, "more than " + std::to_string(*options.limit) + " propagating forcing steps");
    }
    trace.rounds_per_pfs.push_back(rounds);
    idle = 0;
  }
  trace.fs_count = fs;
  trace.pfs_count = pfs;
  trace.outcome = Terminated{StateLabel{std::move(coloring), pfs}};
  return trace;
}

inline ForcingTrace run_with_propagation(const ColoredGraph& graph, const ForcingNetwork& network,
                                         const RunOptions& options = {}) {
  return run_with_propagation(graph.graph, graph.coloring, network, options);
}

/// 3 * |R| * |palette|^n, saturating.
inline std::size_t default_max_fs(std::size_t vertex_count, const ForcingNetwork& network) {
  std::size_t bound = detail::saturating_mul(3, network.rules().size());
  for (std::size_t i = 0; i < vertex_count; ++i) bound = detail::saturating_mul(bound, network.palette().size());
  return bound;
}

/// Runs without propagation, visiting rules cyclically one round at a time.
/// Reports NonTerminating on the first exact repeat of (coloring, next rule
/// position). Events cover every counted visit, no-ops included.
inline ForcingTrace run_without_propagation(const Graph& graph, std::span<const Color> initial,
                                            const ForcingNetwork& network, const RunOptions& options = {}) {
  ForcingTrace trace;
  trace.mode = Mode::NonPropagation;
  trace.initial = StateLabel{{initial.begin(), initial.end()}, 0};
  detail::check_state(graph, trace.initial);

  std::vector<Color> coloring(initial.begin(), initial.end());
  const auto rules = network.rules();
  if (rules.empty()) {
    trace.outcome = Terminated{StateLabel{std::move(coloring), 0}};
    return trace;
  }
  const std::size_t max_fs = options.limit.value_or(default_max_fs(graph.vertex_count(), network));

  std::unordered_map<std::string, std::size_t> seen;
  seen.emplace(detail::state_key(coloring, 0), 0);
  std::vector<VertexId> recolored;
  std::size_t visits = 0;
  std::size_t idle = 0;
  std::size_t last_change = 0;
  for (;;) {
    const ColorChangeRule rule = rules[visits % rules.size()];
    detail::apply_round(coloring, graph, rule, recolored);
    ++visits;
    if (recolored.empty()) {
      ++idle;
    } else {
      if (visits > max_fs) {
        throw Error(Errc::LimitExceeded, "more than " + std::to_string(max_fs) + " forcing steps");
      }
      idle = 0;
      last_change = visits;
    }
    if (options.record_events) trace.events.push_back({rule, recolored, visits, std::nullopt});

    if (idle == rules.size()) {
      trace.fs_count = last_change;
      if (options.record_events) trace.events.resize(last_change);
      trace.outcome = Terminated{StateLabel{std::move(coloring), last_change}};
      return trace;
    }
    auto [it, inserted] = seen.emplace(detail::state_key(coloring, visits % rules.size()), visits);
    if (!inserted) {
      trace.fs_count = visits;
      trace.outcome = NonTerminating{it->second, visits};
      return trace;
    }
  }
}

inline ForcingTrace run_without_propagation(const ColoredGraph& graph, const ForcingNetwork& network,
                                            const RunOptions& options = {}) {
  return run_without_propagation(graph.graph, graph.coloring, network, options);
}

inline ForcingTrace run(const ColoredGraph& graph, const ForcingNetwork& network, Mode mode,
                        const RunOptions& options = {}) {
  return mode == Mode::Propagation ? run_with_propagation(graph, network, options)
                                   : run_without_propagation(graph, network, options);
}

/// Throws NotTerminated for a non-terminating trace.
inline StateLabel end_state(const ForcingTrace& trace) {
  if (const auto* t = std::get_if<Terminated>(&trace.outcome)) return t->final_state;
  const auto& nt = std::get<NonTerminating>(trace.outcome);
  throw Error(Errc::NotTerminated, "run repeats state " + std::to_string(nt.first_index) + " at step " +
                                       std::to_string(nt.repeat_index));
}

/// Coloring after applying the first `event_count` recorded events to the
/// initial state.
inline std::vector<Color> replay(const ForcingTrace& trace, std::size_t event_count) {
  std::vector<Color> coloring = trace.initial.coloring;
  for (std::size_t i = 0; i < event_count && i < trace.events.size(); ++i) {
    for (VertexId v : trace.events[i].recolored) coloring[v] = trace.events[i].rule.source;
  }
  return coloring;
}

inline std::vector<Color> replay(const ForcingTrace& trace) { return replay(trace, trace.events.size()); }

inline bool is_monochrome(std::span<const Color> coloring) {
  return std::adjacent_find(coloring.begin(), coloring.end(), std::not_equal_to<>{}) == coloring.end();
}

}  // namespace mcf
