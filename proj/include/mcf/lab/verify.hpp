#pragma once

// Theorem-verification harness.
//
// A claim is checked over a corpus made of an exhaustive part (every coloring
// of every graph in a list, optionally filtered) and a seeded random part.
// Work fans out over graphs (exhaustive) and fixed-size chunks of random
// instances; results are gathered per task and concatenated in task order, so
// reports do not depend on the worker count.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "mcf/classify.hpp"
#include "mcf/contraction.hpp"
#include "mcf/engine.hpp"
#include "mcf/lab/enumerate.hpp"
#include "mcf/lab/generators.hpp"

namespace mcf::lab {

struct Counterexample {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Color> coloring;
  std::vector<Color> palette;
  std::vector<ColorChangeRule> rules;
  std::string expected;
  std::string observed;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string claim_id;
  std::size_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;  // canonical instance order
  std::optional<std::uint64_t> seed;            // set when a random part ran
  std::chrono::milliseconds elapsed{0};

  bool holds() const noexcept { return counterexamples.empty(); }
};

/// Unset fields take the claim's defaults.
struct CorpusSpec {
  std::optional<std::size_t> n_min;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> random_instances;
  std::optional<std::size_t> random_n_max;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::size_t budget = default_budget;
};

inline std::string coloring_string(std::span<const Color> coloring) {
  const bool compact = std::all_of(coloring.begin(), coloring.end(), [](Color c) { return c.id() < 10; });
  std::string out;
  for (std::size_t i = 0; i < coloring.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += to_string(coloring[i]);
  }
  return out;
}

namespace detail {

struct Verdict {
  enum class Kind { Skip, Pass, Fail } kind = Kind::Pass;
  std::string expected;
  std::string observed;

  static Verdict skip() { return {Kind::Skip, {}, {}}; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::string expected, std::string observed) {
    return {Kind::Fail, std::move(expected), std::move(observed)};
  }
};

using Checker = std::function<Verdict(const Graph&, std::span<const Color>, const ForcingNetwork&)>;

struct Instance {
  Graph graph;
  std::vector<Color> coloring;
  ForcingNetwork network;
};

struct ExhaustivePart {
  std::vector<Graph> graphs;
  ForcingNetwork network;
  ColoringFilters filters;
};

struct RandomPart {
  std::size_t count = 0;
  std::function<Instance(Rng&)> make;
};

struct TaskOutput {
  std::size_t checked = 0;
  std::vector<Counterexample> found;
};

template <class Task>
std::vector<TaskOutput> fan_out(std::size_t tasks, unsigned workers, Task&& task) {
  std::vector<TaskOutput> results(tasks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks) return;
      try {
        results[i] = task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(tasks, 1));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

inline void record(TaskOutput& out, const Verdict& v, const Graph& g, std::span<const Color> coloring,
                   const ForcingNetwork& net) {
  if (v.kind == Verdict::Kind::Skip) return;
  ++out.checked;
  if (v.kind == Verdict::Kind::Pass) return;
  out.found.push_back({g.vertex_count(),
                       {g.edges().begin(), g.edges().end()},
                       {coloring.begin(), coloring.end()},
                       {net.palette().begin(), net.palette().end()},
                       {net.rules().begin(), net.rules().end()},
                       v.expected,
                       v.observed});
}

inline constexpr std::size_t random_chunk = 256;

inline VerificationReport run_corpus(std::string claim_id, const std::vector<ExhaustivePart>& parts,
                                     const RandomPart& random, const Checker& check, const CorpusSpec& spec) {
  const auto start = std::chrono::steady_clock::now();

  std::size_t planned = random.count;
  struct GraphTask {
    const Graph* graph;
    const ExhaustivePart* part;
  };
  std::vector<GraphTask> graph_tasks;
  for (const auto& part : parts) {
    for (const auto& g : part.graphs) {
      planned += coloring_space(g.vertex_count(), part.network.palette().size());
      if (planned > spec.budget) {
        throw Error(Errc::BudgetExceeded, "corpus for " + claim_id + " exceeds the budget of " +
                                              std::to_string(spec.budget) + " instances");
      }
      graph_tasks.push_back({&g, &part});
    }
  }

  const std::size_t random_tasks = (random.count + random_chunk - 1) / random_chunk;
  auto outputs = fan_out(graph_tasks.size() + random_tasks, spec.workers, [&](std::size_t task) {
    TaskOutput out;
    if (task < graph_tasks.size()) {
      const auto& [graph, part] = graph_tasks[task];
      ColoringEnumerator e(*graph, part->network.palette(), part->filters, spec.budget);
      while (e.next()) record(out, check(*graph, e.current(), part->network), *graph, e.current(), part->network);
    } else {
      const std::size_t first = (task - graph_tasks.size()) * random_chunk;
      const std::size_t last = std::min(random.count, first + random_chunk);
      for (std::size_t i = first; i < last; ++i) {
        Rng rng = instance_rng(spec.seed, i);
        Instance inst = random.make(rng);
        record(out, check(inst.graph, inst.coloring, inst.network), inst.graph, inst.coloring, inst.network);
      }
    }
    return out;
  });

  VerificationReport report;
  report.claim_id = std::move(claim_id);
  for (auto& out : outputs) {
    report.instances_checked += out.checked;
    for (auto& c : out.found) report.counterexamples.push_back(std::move(c));
  }
  if (random.count > 0) report.seed = spec.seed;
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

inline std::vector<Graph> connected_range(std::size_t lo, std::size_t hi) {
  std::vector<Graph> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    for (auto& g : connected_graphs(n)) out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<Color> end_coloring(const Graph& g, std::span<const Color> coloring, const ForcingNetwork& net) {
  auto trace = run_with_propagation(g, coloring, net, {.limit = std::nullopt, .record_events = false});
  return std::get<Terminated>(trace.outcome).final_state.coloring;
}

inline Verdict compare_prediction(const EndStatePrediction& p, const Graph& g, std::span<const Color> coloring,
                                  const ForcingNetwork& net) {
  const auto end = end_coloring(g, coloring, net);
  if (!p.known()) return Verdict::fail("a characterization", "Unknown; engine " + coloring_string(end));
  const std::vector<Color> want(g.vertex_count(), *p.color);
  if (end != want) return Verdict::fail(coloring_string(want) + " (" + std::string(basis_name(p.basis)) + ")",
                                        coloring_string(end));
  return Verdict::pass();
}

inline Instance random_connected_instance(Rng& rng, std::size_t n_max, ForcingNetwork net) {
  const std::size_t n = uniform_index(rng, 1, n_max);
  Graph g = random_connected(n, 0.3, rng);
  auto coloring = random_coloring(n, net.palette(), rng);
  return {std::move(g), std::move(coloring), std::move(net)};
}

inline std::size_t distinct_colors(std::span<const Color> coloring) { return std::popcount(mcf::detail::color_mask(coloring)); }

}  // namespace detail

struct Claim {
  std::string_view id;
  std::string_view statement;
  std::function<VerificationReport(const CorpusSpec&)> run;
};

/// Registered claims, in a stable order.
inline const std::vector<Claim>& claims() {
  using namespace detail;
  static const std::vector<Claim> registry = {
      {"pfs-bound", "with propagation, every run ends within n-1 propagating forcing steps",
       [](const CorpusSpec& s) {
         const std::size_t rn = s.random_n_max.value_or(10);
         RandomPart random{s.random_instances.value_or(100'000), [rn](Rng& rng) {
                             ForcingNetwork net = random_network(4, rng);
                             return random_connected_instance(rng, rn, std::move(net));
                           }};
         return run_corpus("pfs-bound",
                           {{connected_range(s.n_min.value_or(1), s.n_max.value_or(5)), cyclic3_network(), {}}},
                           random,
                           [](const Graph& g, std::span<const Color> c, const ForcingNetwork& net) {
                             auto t = run_with_propagation(g, c, net, {.limit = std::nullopt, .record_events = false});
                             const std::size_t bound = g.vertex_count() > 0 ? g.vertex_count() - 1 : 0;
                             if (*t.pfs_count <= bound) return Verdict::pass();
                             return Verdict::fail("pfs<=" + std::to_string(bound), "pfs=" + std::to_string(*t.pfs_count));
                           },
                           s);
       }},
      {"monochrome-end", "the 3-cyclic network with propagation ends monochrome on connected graphs",
       [](const CorpusSpec& s) {
         const std::size_t rn = s.random_n_max.value_or(10);
         RandomPart random{s.random_instances.value_or(100'000),
                           [rn](Rng& rng) { return random_connected_instance(rng, rn, cyclic3_network()); }};
         return run_corpus("monochrome-end",
                           {{connected_range(s.n_min.value_or(1), s.n_max.value_or(5)), cyclic3_network(), {}}},
                           random,
                           [](const Graph& g, std::span<const Color> c, const ForcingNetwork& net) {
                             auto end = end_coloring(g, c, net);
                             if (is_monochrome(end)) return Verdict::pass();
                             return Verdict::fail("monochrome", coloring_string(end));
                           },
                           s);
       }},
      {"tree-diam", "on a tree every propagating forcing step takes at most diam(T) rounds",
       [](const CorpusSpec& s) {
         const std::size_t rn = s.random_n_max.value_or(12);
         std::vector<Graph> trees;
         for (std::size_t n = s.n_min.value_or(1); n <= s.n_max.value_or(6); ++n) {
           for (auto& t : labeled_trees(n)) trees.push_back(std::move(t));
         }
         RandomPart random{s.random_instances.value_or(10'000), [rn](Rng& rng) {
                             const std::size_t n = uniform_index(rng, 1, rn);
                             Graph t = random_tree(n, rng);
                             ForcingNetwork net = random_network(4, rng);
                             auto coloring = random_coloring(n, net.palette(), rng);
                             return Instance{std::move(t), std::move(coloring), std::move(net)};
                           }};
         return run_corpus("tree-diam", {{std::move(trees), cyclic3_network(), {}}}, random,
                           [](const Graph& g, std::span<const Color> c, const ForcingNetwork& net) {
                             const std::size_t d = graph_diameter(g);
                             auto t = run_with_propagation(g, c, net, {.limit = std::nullopt, .record_events = false});
                             for (std::size_t r : t.rounds_per_pfs) {
                               if (r > d) {
                                 return Verdict::fail("rounds<=" + std::to_string(d), "rounds=" + std::to_string(r));
                               }
                             }
                             return Verdict::pass();
                           },
                           s);
       }},
      {"acyclic-terminates", "acyclic networks terminate without propagation",
       [](const CorpusSpec& s) {
         const std::size_t rn = s.random_n_max.value_or(8);
         RandomPart random{s.random_instances.value_or(10'000), [rn](Rng& rng) {
                             ForcingNetwork net = random_acyclic_network(4, rng);
                             return random_connected_instance(rng, rn, std::move(net));
                           }};
         return run_corpus("acyclic-terminates",
                           {{connected_range(s.n_min.value_or(1), s.n_max.value_or(4)), linear_r1_network(), {}}},
                           random,
                           [](const Graph& g, std::span<const Color> c, const ForcingNetwork& net) {
                             try {
                               auto t = run_without_propagation(g, c, net, {.limit = std::nullopt, .record_events = false});
                               if (t.terminated()) return Verdict::pass();
                               const auto& nt = std::get<NonTerminating>(t.outcome);
                               return Verdict::fail("terminated", "state " + std::to_string(nt.first_index) +
                                                                      " repeats at " + std::to_string(nt.repeat_index));
                             } catch (const Error& e) {
                               return Verdict::fail("terminated", e.what());
                             }
                           },
                           s);
       }},
      {"contract-commute", "lifting the quotient's end state gives the graph's end state",
       [](const CorpusSpec& s) {
         const std::size_t rn = s.random_n_max.value_or(10);
         RandomPart random{s.random_instances.value_or(0), [rn](Rng& rng) {
                             ForcingNetwork net = random_network(4, rng);
                             return random_connected_instance(rng, rn, std::move(net));
                           }};
         return run_corpus("contract-commute",
                           {{connected_range(s.n_min.value_or(1), s.n_max.value_or(5)), cyclic3_network(), {}}},
                           random,
                           [](const Graph& g, std::span<const Color> c, const ForcingNetwork& net) {
                             ColoredGraph cg{g, {c.begin(), c.end()}, {net.palette().begin(), net.palette().end()}};
                             const ContractionMap map = color_contract(cg);
                             auto direct = end_coloring(g, c, net);
                             auto quotient_end = end_state(run_with_propagation(map.quotient, net));
                             auto lifted = lift_end_state(quotient_end, map).coloring;
                             if (lifted == direct) return Verdict::pass();
                             return Verdict::fail(coloring_string(direct), coloring_string(lifted));
                           },
                           s);
       }},
      {"kn-all3", "complete graphs with every color present end all-3",
       [](const CorpusSpec& s) {
         std::vector<Graph> graphs;
         for (std::size_t n = s.n_min.value_or(3); n <= s.n_max.value_or(6); ++n) graphs.push_back(complete_graph(n));
         return run_corpus("kn-all3", {{std::move(graphs), cyclic3_network(), {}}}, {},
                           [](const Graph& g, std::span<const Color> c, const ForcingNetwork& net) {
                             auto p = distinct_colors(c) == 3 ? classify_complete(g, c)
                                                           : classify_two_color(StateLabel{{c.begin(), c.end()}, 0}, g);
                             return compare_prediction(p, g, c, net);
                           },
                           s);
       }},
      {"kmn", "complete bipartite graphs end all-1 iff a whole part is colored 3",
       [](const CorpusSpec& s) {
         std::vector<Graph> graphs;
         const std::size_t hi = s.n_max.value_or(3);
         for (std::size_t m = s.n_min.value_or(1); m <= hi; ++m) {
           for (std::size_t n = s.n_min.value_or(1); n <= hi; ++n) graphs.push_back(complete_bipartite_graph(m, n));
         }
         return run_corpus("kmn", {{std::move(graphs), cyclic3_network(), {}}}, {},
                           [](const Graph& g, std::span<const Color> c, const ForcingNetwork& net) {
                             EndStatePrediction p;
                             if (distinct_colors(c) == 3) {
                               auto parts = mcf::detail::complete_bipartition(g);
                               p = classify_complete_bipartite(g, (*parts)[0], (*parts)[1], c);
                             } else {
                               p = classify_two_color(StateLabel{{c.begin(), c.end()}, 0}, g);
                             }
                             return compare_prediction(p, g, c, net);
                           },
                           s);
       }},
      {"path-k5", "contracted paths of length <= 5 follow the five-case path characterization",
       [](const CorpusSpec& s) {
         std::vector<Graph> graphs;
         for (std::size_t n = s.n_min.value_or(1); n <= std::min<std::size_t>(s.n_max.value_or(5), 5); ++n) {
           graphs.push_back(path_graph(n));
         }
         return run_corpus("path-k5", {{std::move(graphs), cyclic3_network(), {.contracted = true}}}, {},
                           [](const Graph& g, std::span<const Color> c, const ForcingNetwork& net) {
                             return compare_prediction(classify_path(c), g, c, net);
                           },
                           s);
       }},
      {"two-color", "a state using two colors fixes the end state ({1,2}->1, {2,3}->2, {1,3}->3)",
       [](const CorpusSpec& s) {
         return run_corpus(
             "two-color", {{connected_range(s.n_min.value_or(1), s.n_max.value_or(5)), cyclic3_network(), {}}}, {},
             [](const Graph& g, std::span<const Color> c, const ForcingNetwork& net) {
               auto trace = run_with_propagation(g, c, net);
               const auto end = end_state(trace).coloring;
               // States after each propagating step, starting with the initial one.
               std::vector<std::vector<Color>> states{trace.initial.coloring};
               for (std::size_t i = 0; i < trace.events.size(); ++i) {
                 const bool last_of_pfs =
                     i + 1 == trace.events.size() || trace.events[i + 1].pfs_index != trace.events[i].pfs_index;
                 if (last_of_pfs) states.push_back(replay(trace, i + 1));
               }
               for (std::size_t k = 0; k < states.size(); ++k) {
                 if (distinct_colors(states[k]) == 3) continue;
                 auto p = classify_two_color(StateLabel{states[k], k}, g);
                 if (!p.known() || end != std::vector<Color>(g.vertex_count(), *p.color)) {
                   return Verdict::fail("after PFS " + std::to_string(k) + ": " + to_string(p), coloring_string(end));
                 }
               }
               return Verdict::pass();
             },
             s);
       }},
      {"three-color-conditions", "each sufficient three-color condition that holds predicts the end state",
       [](const CorpusSpec& s) {
         return run_corpus(
             "three-color-conditions",
             {{connected_range(s.n_min.value_or(3), s.n_max.value_or(5)), cyclic3_network(),
               {.all_colors_present = true, .contracted = true}}},
             {},
             [](const Graph& g, std::span<const Color> c, const ForcingNetwork& net) {
               const auto cond = three_color_conditions(g, c);
               if (!cond.first && !cond.second && !cond.third) return Verdict::skip();
               const auto end = end_coloring(g, c, net);
               const std::pair<bool, int> checks[] = {{cond.first, 1}, {cond.second, 3}, {cond.third, 2}};
               for (std::size_t i = 0; i < 3; ++i) {
                 const auto [holds, color] = checks[i];
                 if (holds && end != std::vector<Color>(g.vertex_count(), Color(color))) {
                   return Verdict::fail("condition " + std::to_string(i + 1) + " -> all-" + std::to_string(color),
                                        coloring_string(end));
                 }
               }
               return Verdict::pass();
             },
             s);
       }},
      {"r1-linear", "the linear network R1 ends with the smallest present color",
       [](const CorpusSpec& s) {
         const std::size_t rn = s.random_n_max.value_or(10);
         RandomPart random{s.random_instances.value_or(10'000), [rn](Rng& rng) {
                             // R1 under a random renaming and rule order.
                             std::vector<Color> sigma = make_colors({1, 2, 3});
                             std::shuffle(sigma.begin(), sigma.end(), rng);
                             std::vector<ColorChangeRule> rules{
                                 {sigma[0], sigma[1]}, {sigma[1], sigma[2]}, {sigma[0], sigma[2]}};
                             std::shuffle(rules.begin(), rules.end(), rng);
                             return random_connected_instance(rng, rn, validate_network(sigma, rules));
                           }};
         return run_corpus("r1-linear",
                           {{connected_range(s.n_min.value_or(1), s.n_max.value_or(4)), linear_r1_network(), {}}},
                           random,
                           [](const Graph& g, std::span<const Color> c, const ForcingNetwork& net) {
                             ColoredGraph cg{g, {c.begin(), c.end()}, {net.palette().begin(), net.palette().end()}};
                             return compare_prediction(predict(cg, net), g, c, net);
                           },
                           s);
       }},
  };
  return registry;
}

/// Throws UnknownClaim or BudgetExceeded.
inline VerificationReport verify_claim(std::string_view claim_id, const CorpusSpec& spec = {}) {
  for (const auto& claim : claims()) {
    if (claim.id == claim_id) return claim.run(spec);
  }
  throw Error(Errc::UnknownClaim, "no claim named '" + std::string(claim_id) + "'");
}

}  // namespace mcf::lab
