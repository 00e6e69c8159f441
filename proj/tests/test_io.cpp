#include <gtest/gtest.h>

#include "support.hpp"

using namespace mcf;

namespace {

const char* triangle = R"({
  "palette": [1, 2, 3],
  "rules": [[1, 2], [2, 3], [3, 1]],
  "vertices": ["A", "B", "C"],
  "edges": [["A", "B"], ["B", "C"], ["A", "C"]],
  "coloring": {"A": 3, "B": 2, "C": 1}
})";

Errc parse_code(std::string_view text) {
  try {
    io::bind(io::parse_instance(text));
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidParams;
}

std::string sample(const std::string& name) { return io::read_file(std::string(MCF_SAMPLES_DIR) + "/" + name); }

}  // namespace

TEST(Instance, ParsesAndBinds) {
  auto inst = io::bind(io::parse_instance(triangle));
  EXPECT_EQ(inst.names, (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_EQ(inst.network, cyclic3_network());
  EXPECT_EQ(lab::coloring_string(inst.graph.coloring), "321");
  EXPECT_EQ(inst.graph.graph.edge_count(), 3u);
}

TEST(Instance, RoundTrip) {
  auto doc = io::parse_instance(triangle);
  auto again = io::parse_instance(io::serialize_instance(doc));
  EXPECT_EQ(doc, again);
  EXPECT_EQ(io::serialize_instance(doc), io::serialize_instance(again));
}

TEST(Instance, RoundTripRandomDocuments) {
  lab::Rng rng = lab::instance_rng(21, 0);
  for (int i = 0; i < 200; ++i) {
    auto net = lab::random_network(4, rng);
    auto g = lab::random_connected(1 + lab::uniform_index(rng, 0, 8), 0.3, rng);
    ColoredGraph cg{g, lab::random_coloring(g.vertex_count(), net.palette(), rng), {}};
    std::vector<std::string> names;
    for (VertexId v = 0; v < g.vertex_count(); ++v) names.push_back("v" + std::to_string(g.vertex_count() - v));
    auto doc = io::to_document(net, cg, names);
    auto back = io::parse_instance(io::serialize_instance(doc));
    ASSERT_EQ(doc, back);
    auto inst = io::bind(back);
    ASSERT_EQ(inst.graph.graph, g);
    ASSERT_EQ(inst.graph.coloring, cg.coloring);
    ASSERT_EQ(inst.network, net);
  }
}

TEST(Instance, Errors) {
  EXPECT_EQ(parse_code("{"), Errc::ParseError);
  EXPECT_EQ(parse_code(R"({"palette": [1]})"), Errc::ParseError);
  EXPECT_EQ(parse_code(R"({"palette":[1,2],"rules":[],"vertices":["a","a"],"edges":[],"coloring":{"a":1}})"),
            Errc::ParseError);
  EXPECT_EQ(parse_code(R"({"palette":[1,2],"rules":[],"vertices":["a"],"edges":[["a","z"]],"coloring":{"a":1}})"),
            Errc::ParseError);
  EXPECT_EQ(parse_code(R"({"palette":[1,2],"rules":[],"vertices":["a","b"],"edges":[],"coloring":{"a":1}})"),
            Errc::UncoloredVertex);
  EXPECT_EQ(parse_code(R"({"palette":[1,2],"rules":[],"vertices":["a"],"edges":[],"coloring":{"a":7}})"),
            Errc::ColorOutsidePalette);
  EXPECT_EQ(parse_code(R"({"palette":[1,2],"rules":[[1,1]],"vertices":["a"],"edges":[],"coloring":{"a":1}})"),
            Errc::SelfLoopRule);
  EXPECT_EQ(parse_code(R"({"palette":[1,2],"rules":[],"vertices":["a"],"edges":[["a","a"]],"coloring":{"a":1}})"),
            Errc::SelfLoopEdge);
  EXPECT_EQ(parse_code(R"({"palette":[1,2],"rules":[],"vertices":["a"],"edges":[],"coloring":{"a":"x"}})"),
            Errc::ParseError);
}

TEST(Dot, ParsesChainsAndColors) {
  auto g = io::parse_dot(R"(
    strict graph G {
      // comment
      node [shape=circle];
      rankdir=LR
      a [color=1]; "b c" [label="x", color="2"]
      c [color=3]
      a -- "b c" -- c [style=bold];
    })");
  EXPECT_EQ(g.vertices, (std::vector<std::string>{"a", "b c", "c"}));
  ASSERT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(g.colors.at("b c"), 2);
  auto inst = io::bind(io::document_from_dot(g, cyclic3_network()));
  EXPECT_EQ(lab::coloring_string(inst.graph.coloring), "123");
}

TEST(Dot, Errors) {
  EXPECT_THROW(io::parse_dot("digraph { a -> b }"), Error);
  EXPECT_THROW(io::parse_dot("graph { a -> b }"), Error);
  EXPECT_THROW(io::parse_dot("graph { a [color=red] }"), Error);
  EXPECT_THROW(io::parse_dot("graph { a -- b"), Error);
  // Uncolored vertex is caught at bind time.
  auto g = io::parse_dot("graph { a [color=1]; a -- b }");
  EXPECT_THROW(io::bind(io::document_from_dot(g, cyclic3_network())), Error);
}

TEST(Dot, ExportReimports) {
  auto inst = io::bind(io::parse_instance(sample("contract10.json")));
  auto text = io::to_dot(inst.graph, inst.names, inst.graph.coloring);
  auto back = io::bind(io::document_from_dot(io::parse_dot(text), inst.network));
  EXPECT_EQ(back.graph.graph, inst.graph.graph);
  EXPECT_EQ(back.graph.coloring, inst.graph.coloring);
  EXPECT_EQ(back.names, inst.names);
}

TEST(Dot, SampleMatchesJson) {
  auto dot = io::bind(io::document_from_dot(io::parse_dot(sample("cycle6_133221.dot")), cyclic3_network()));
  auto json = io::bind(io::parse_instance(sample("cycle6_133221.json")));
  EXPECT_EQ(dot.graph.graph, json.graph.graph);
  EXPECT_EQ(dot.graph.coloring, json.graph.coloring);
}

TEST(Render, TraceText) {
  auto inst = io::bind(io::parse_instance(sample("cycle6_133221.json")));
  auto t = run_with_propagation(inst.graph, inst.network);
  auto text = io::render_trace_text(t, inst.names);
  EXPECT_NE(text.find("FS 1 (PFS 1) rule 1->2: E\n"), std::string::npos) << text;
  EXPECT_NE(text.find("final: A=3 B=3 C=3 D=3 E=3 F=3\n"), std::string::npos) << text;
  EXPECT_NE(text.find("summary: Terminated FS=4 PFS=2\n"), std::string::npos) << text;
}

// Structured output replays to the same final coloring the text reports.
TEST(Render, StructuredReplaysToFinal) {
  for (const char* name : {"cycle6_133221.json", "path4_two_rules.json", "star4_three_rules.json", "fan6.json", "triangle_321.json"}) {
    auto inst = io::bind(io::parse_instance(sample(name)));
    for (Mode m : {Mode::Propagation, Mode::NonPropagation}) {
      auto t = run(inst.graph, inst.network, m);
      if (!t.terminated()) continue;
      auto j = io::trace_json(t, inst.names);
      ASSERT_EQ(io::replay_trace_json(j), j["outcome"]["final"]) << name;
      ASSERT_EQ(j["fs_count"].get<std::size_t>(), t.fs_count);
    }
  }
}

TEST(Render, NonTerminatingWitness) {
  auto inst = io::bind(io::parse_instance(sample("cycle6_133221.json")));
  auto t = run_without_propagation(inst.graph, inst.network);
  auto j = io::trace_json(t, inst.names);
  EXPECT_EQ(j["outcome"]["kind"], "non_terminating");
  EXPECT_NE(io::render_trace_text(t, inst.names).find("NonTerminating"), std::string::npos);
}

TEST(Render, ContractionNamesAndQuotient) {
  auto inst = io::bind(io::parse_instance(sample("contract10.json")));
  auto map = color_contract(inst.graph);
  auto j = io::contraction_json(map, inst.network, inst.names);
  EXPECT_EQ(j["components"].size(), 4u);
  EXPECT_EQ(j["components"][0]["name"], "A+C");
  auto q = io::bind(io::document_from_json(j["quotient"]));
  EXPECT_EQ(q.graph.graph, map.quotient.graph);
}

TEST(Render, ReportWithoutElapsed) {
  lab::VerificationReport r;
  r.claim_id = "x";
  r.instances_checked = 3;
  r.seed = 5;
  r.elapsed = std::chrono::milliseconds(17);
  auto with = io::report_json(r);
  auto without = io::report_json(r, false);
  EXPECT_EQ(with["elapsed_ms"], 17);
  EXPECT_FALSE(without.contains("elapsed_ms"));
  EXPECT_EQ(without["seed"], 5);
  EXPECT_EQ(std::vector<std::string>({"claim_id", "instances_checked", "counterexamples", "seed", "elapsed_ms"}),
            [&] {
              std::vector<std::string> keys;
              for (auto& [k, v] : with.items()) keys.push_back(k);
              return keys;
            }());
}
