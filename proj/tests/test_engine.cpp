#include <gtest/gtest.h>

#include "support.hpp"

using namespace mcf;
using support::seq;

namespace {

ColoredGraph cycle6(std::string_view digits) {
  return support::colored(lab::cycle_graph(6), seq(digits), cyclic3_network());
}

std::vector<std::string> states_of(const ForcingTrace& t) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= t.events.size(); ++k) out.push_back(lab::coloring_string(replay(t, k)));
  return out;
}

}  // namespace

TEST(Round, SynchronousUsesOldColoring) {
  // P3 colored 1 2 2: only the vertex next to the 1 changes in one round.
  auto g = support::colored(lab::path_graph(3), seq("122"), cyclic3_network());
  auto r = forcing_round(g.initial_state(), g, {Color(1), Color(2)});
  EXPECT_EQ(lab::coloring_string(r.state.coloring), "112");
  EXPECT_EQ(r.recolored, (std::vector<VertexId>{1}));
  EXPECT_EQ(r.state.step_index, 1u);
}

TEST(Round, NoChangeKeepsStepIndex) {
  auto g = support::colored(lab::path_graph(3), seq("333"), cyclic3_network());
  auto r = forcing_round(g.initial_state(), g, {Color(1), Color(2)});
  EXPECT_TRUE(r.recolored.empty());
  EXPECT_EQ(r.state.step_index, 0u);
}

TEST(Round, DomainMismatch) {
  auto g = support::colored(lab::path_graph(3), seq("123"), cyclic3_network());
  StateLabel wrong{seq("12"), 0};
  EXPECT_THROW(forcing_round(wrong, g, {Color(1), Color(2)}), Error);
}

TEST(Propagating, ExhaustsRule) {
  auto g = support::colored(lab::path_graph(5), seq("12222"), cyclic3_network());
  auto p = propagating_step(g.initial_state(), g, {Color(1), Color(2)});
  EXPECT_EQ(lab::coloring_string(p.state.coloring), "11111");
  EXPECT_EQ(p.rounds.size(), 4u);
}

TEST(WorkedExamples, SixCycleWithPropagation) {
  auto t = run_with_propagation(cycle6("133221"), cyclic3_network());
  EXPECT_EQ(states_of(t), (std::vector<std::string>{"133211", "133111", "333311", "333333"}));
  EXPECT_EQ(t.fs_count, 4u);
  EXPECT_EQ(*t.pfs_count, 2u);
  EXPECT_EQ(t.events[0].pfs_index, 1u);
  EXPECT_EQ(t.events[2].pfs_index, 2u);
}

TEST(WorkedExamples, SixCycleWithoutPropagationRepeats) {
  const auto g = cycle6("133221");
  auto t = run_without_propagation(g, cyclic3_network());
  auto s = states_of(t);
  ASSERT_GE(s.size(), 3u);
  EXPECT_EQ(s[0], "133211");
  EXPECT_EQ(s[1], "132211");
  EXPECT_EQ(s[2], "332211");
  ASSERT_FALSE(t.terminated());
  auto ref = oracle::run_noprop(support::to_matrix(g.graph), support::ints(g.coloring), support::rules(cyclic3_network()));
  ASSERT_FALSE(ref.terminated);
  const auto& nt = std::get<NonTerminating>(t.outcome);
  EXPECT_EQ(nt.first_index, ref.first);
  EXPECT_EQ(nt.repeat_index, ref.repeat);
  EXPECT_THROW(end_state(t), Error);
}

TEST(WorkedExamples, PathTerminatesEarly) {
  auto net = validate_network({1, 2, 3}, {{1, 2}, {2, 3}});
  auto g = support::colored(lab::path_graph(4), seq("1213"), net);
  auto t = run_without_propagation(g, net);
  ASSERT_TRUE(t.terminated());
  EXPECT_EQ(t.fs_count, 1u);
  EXPECT_EQ(lab::coloring_string(end_state(t).coloring), "1113");
}

TEST(WorkedExamples, StarNeedsThreePropagatingSteps) {
  auto net = validate_network({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}});
  std::vector<Edge> e{{1, 0}, {1, 2}, {1, 3}};
  auto g = validate_colored_graph(4, e, seq("1234"), net);
  auto t = run_with_propagation(g, net);
  EXPECT_EQ(*t.pfs_count, 3u);
  EXPECT_EQ(lab::coloring_string(end_state(t).coloring), "1111");
  EXPECT_EQ(lab::graph_diameter(g), 2u);
}

TEST(WorkedExamples, FanNeedsFourRounds) {
  auto net = validate_network({1, 2, 3}, {{1, 2}});
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
  auto g = validate_colored_graph(6, e, seq("312222"), net);
  auto t = run_with_propagation(g, net);
  EXPECT_EQ(*t.pfs_count, 1u);
  EXPECT_EQ(t.rounds_per_pfs, (std::vector<std::size_t>{4}));
  EXPECT_EQ(lab::graph_diameter(g), 2u);
}

TEST(WorkedExamples, TriangleCountsNoOp) {
  auto g = support::colored(lab::complete_graph(3), seq("321"), cyclic3_network());
  auto t = run_without_propagation(g, cyclic3_network());
  ASSERT_TRUE(t.terminated());
  EXPECT_EQ(t.fs_count, 3u);
  ASSERT_EQ(t.events.size(), 3u);
  EXPECT_TRUE(t.events[1].recolored.empty());
  EXPECT_EQ(t.events[2].recolored.size(), 2u);
  EXPECT_EQ(lab::coloring_string(end_state(t).coloring), "333");
}

TEST(WorkedExamples, SevenPathSensitivity) {
  auto net = cyclic3_network();
  auto pfs_states = [&](std::string_view digits) {
    auto g = support::colored(lab::path_graph(7), seq(digits), net);
    auto t = run_with_propagation(g, net);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < t.events.size(); ++i) {
      if (i + 1 == t.events.size() || t.events[i + 1].pfs_index != t.events[i].pfs_index) {
        out.push_back(lab::coloring_string(replay(t, i + 1)));
      }
    }
    return out;
  };
  EXPECT_EQ(pfs_states("2312321"), (std::vector<std::string>{"2311311", "2211311", "2233333", "2222222"}));
  EXPECT_EQ(pfs_states("2312322"), (std::vector<std::string>{"2311322", "2211222", "1111111"}));
}

TEST(Run, EmptyRuleList) {
  auto net = validate_network({1, 2}, {});
  auto g = support::colored(lab::path_graph(2), seq("12"), net);
  for (Mode m : {Mode::Propagation, Mode::NonPropagation}) {
    auto t = run(g, net, m);
    EXPECT_TRUE(t.terminated());
    EXPECT_EQ(t.fs_count, 0u);
  }
}

TEST(Run, PropagationLimit) {
  auto g = cycle6("133221");
  EXPECT_THROW(run_with_propagation(g, cyclic3_network(), {.limit = 1}), Error);
  EXPECT_NO_THROW(run_with_propagation(g, cyclic3_network(), {.limit = 2}));
}

TEST(Run, NonPropagationLimit) {
  auto g = cycle6("133221");
  try {
    run_without_propagation(g, cyclic3_network(), {.limit = 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LimitExceeded);
  }
}

TEST(Run, DefaultMaxFsSaturates) {
  EXPECT_EQ(default_max_fs(2, cyclic3_network()), 3u * 3u * 9u);
  EXPECT_EQ(default_max_fs(200, cyclic3_network()), std::numeric_limits<std::size_t>::max());
}

// Engine vs oracle over every coloring of every connected graph on n <= 4,
// under several networks, in both modes.
TEST(Properties, AgreesWithOracle) {
  std::vector<ForcingNetwork> nets{cyclic3_network(), linear_r1_network(),
                                   validate_network({1, 2, 3}, {{3, 1}, {1, 2}}),
                                   validate_network({1, 2, 3}, {{2, 1}, {1, 2}, {3, 2}})};
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& g : lab::connected_graphs(n)) {
      auto adj = support::to_matrix(g);
      for (const auto& net : nets) {
        auto rs = support::rules(net);
        for (const auto& c : lab::enumerate_colorings(g, net.palette(), {})) {
          auto t = run_with_propagation(g, c, net);
          auto ref = oracle::run_prop(adj, support::ints(c), rs);
          ASSERT_EQ(*t.pfs_count, ref.pfs);
          ASSERT_EQ(t.fs_count, ref.states.size());
          ASSERT_EQ(support::ints(end_state(t).coloring), ref.end);
          for (std::size_t k = 0; k < t.events.size(); ++k) {
            ASSERT_EQ(support::ints(replay(t, k + 1)), ref.states[k]);
            ASSERT_EQ(*t.events[k].pfs_index, ref.pfs_of_fs[k]);
          }

          auto u = run_without_propagation(g, c, net);
          auto uref = oracle::run_noprop(adj, support::ints(c), rs);
          ASSERT_EQ(u.terminated(), uref.terminated);
          if (u.terminated()) {
            ASSERT_EQ(u.fs_count, uref.fs);
            ASSERT_EQ(support::ints(end_state(u).coloring), uref.end);
          } else {
            const auto& nt = std::get<NonTerminating>(u.outcome);
            ASSERT_EQ(nt.first_index, uref.first);
            ASSERT_EQ(nt.repeat_index, uref.repeat);
          }
          for (std::size_t k = 0; k < u.events.size(); ++k) ASSERT_EQ(support::ints(replay(u, k + 1)), uref.states[k]);
        }
      }
    }
  }
}

TEST(Properties, RecoloredVerticesHadTargetAndSourceNeighbor) {
  lab::Rng rng = lab::instance_rng(7, 0);
  for (int i = 0; i < 300; ++i) {
    auto net = lab::random_network(4, rng);
    auto g = lab::random_connected(1 + lab::uniform_index(rng, 0, 8), 0.3, rng);
    auto c = lab::random_coloring(g.vertex_count(), net.palette(), rng);
    auto t = run_without_propagation(g, c, net);
    for (std::size_t k = 0; k < t.events.size(); ++k) {
      auto before = replay(t, k);
      const auto& e = t.events[k];
      ASSERT_TRUE(std::is_sorted(e.recolored.begin(), e.recolored.end()));
      for (VertexId v : e.recolored) {
        ASSERT_EQ(before[v], e.rule.target);
        auto nb = g.neighbors(v);
        ASSERT_TRUE(std::any_of(nb.begin(), nb.end(), [&](VertexId u) { return before[u] == e.rule.source; }));
      }
    }
  }
}

TEST(Properties, Deterministic) {
  auto g = cycle6("133221");
  for (Mode m : {Mode::Propagation, Mode::NonPropagation}) {
    auto a = run(g, cyclic3_network(), m);
    auto b = run(g, cyclic3_network(), m);
    EXPECT_EQ(a.events, b.events);
    EXPECT_EQ(a.fs_count, b.fs_count);
    EXPECT_EQ(a.outcome, b.outcome);
  }
}

TEST(Properties, MonochromeIsFixedPoint) {
  for (int c = 1; c <= 3; ++c) {
    auto g = support::colored(lab::path_graph(4), std::vector<Color>(4, Color(c)), cyclic3_network());
    auto t = run_with_propagation(g, cyclic3_network());
    EXPECT_EQ(t.fs_count, 0u);
    EXPECT_TRUE(is_monochrome(end_state(t).coloring));
  }
}
