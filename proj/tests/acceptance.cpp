// Acceptance run: one PASS/FAIL line per criterion. All checks are exact.
// Exits non-zero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mcf/mcf.hpp"

using namespace mcf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<Color> seq(std::string_view digits) {
  std::vector<Color> out;
  for (char d : digits) out.emplace_back(d - '0');
  return out;
}

std::string after(const ForcingTrace& t, std::size_t k) { return lab::coloring_string(replay(t, k)); }

// Colorings at the end of each PFS.
std::vector<std::string> pfs_states(const ForcingTrace& t) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < t.events.size(); ++i) {
    if (i + 1 == t.events.size() || t.events[i + 1].pfs_index != t.events[i].pfs_index) out.push_back(after(t, i + 1));
  }
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      out_.pass = false;
      out_.detail += (out_.detail.empty() ? "" : "; ") + what;
    }
  }
  Outcome done(std::string summary) {
    if (out_.pass) out_.detail = std::move(summary);
    return out_;
  }

 private:
  Outcome out_;
};

Outcome worked_examples() {
  Checks c;
  const auto cyc = cyclic3_network();
  {
    auto g = validate_colored_graph(lab::cycle_graph(6), seq("133221"), cyc);
    auto t = run_with_propagation(g, cyc);
    std::vector<std::string> want{"133211", "133111", "333311", "333333"};
    std::vector<std::string> got;
    for (std::size_t k = 1; k <= t.events.size(); ++k) got.push_back(after(t, k));
    c.expect(got == want, "six-cycle prop states " + join(got));
    c.expect(t.fs_count == 4 && *t.pfs_count == 2, "six-cycle prop counts");

    auto u = run_without_propagation(g, cyc);
    c.expect(u.events.size() >= 3 && after(u, 1) == "133211" && after(u, 2) == "132211" && after(u, 3) == "332211",
             "six-cycle noprop first three states");
    c.expect(!u.terminated(), "six-cycle noprop should not terminate");
  }
  {
    auto net = validate_network({1, 2, 3}, {{1, 2}, {2, 3}});
    auto g = validate_colored_graph(lab::path_graph(4), seq("1213"), net);
    auto t = run_without_propagation(g, net);
    c.expect(t.terminated() && t.fs_count == 1 && lab::coloring_string(end_state(t).coloring) == "1113", "path 1213");
  }
  {
    auto net = validate_network({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}});
    std::vector<Edge> e{{1, 0}, {1, 2}, {1, 3}};
    auto g = validate_colored_graph(4, e, seq("1234"), net);
    auto t = run_with_propagation(g, net);
    c.expect(*t.pfs_count == 3 && lab::graph_diameter(g) == 2, "star: 3 PFS, diameter 2");
  }
  {
    auto net = validate_network({1, 2, 3}, {{1, 2}});
    std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    auto g = validate_colored_graph(6, e, seq("312222"), net);
    auto t = run_with_propagation(g, net);
    c.expect(*t.pfs_count == 1 && t.rounds_per_pfs == std::vector<std::size_t>{4} && lab::graph_diameter(g) == 2,
             "fan: one PFS of 4 rounds");
  }
  {
    auto g = validate_colored_graph(lab::complete_graph(3), seq("321"), cyc);
    auto t = run_without_propagation(g, cyc);
    c.expect(t.terminated() && t.fs_count == 3 && t.events.size() == 3 && t.events[1].recolored.empty() &&
                 lab::coloring_string(end_state(t).coloring) == "333",
             "triangle: all-3 after 3 FS with a no-op");
  }
  return c.done("six-cycle prop 4 FS/2 PFS, noprop repeats; 1213->1113; star 3 PFS; fan 4 rounds; triangle 3 FS");
}

Outcome sensitivity() {
  Checks c;
  const auto cyc = cyclic3_network();
  auto run7 = [&](std::string_view digits) {
    return pfs_states(run_with_propagation(validate_colored_graph(lab::path_graph(7), seq(digits), cyc), cyc));
  };
  auto a = run7("2312321");
  auto b = run7("2312322");
  c.expect(join(a) == "2311311 2211311 2233333 2222222", "2312321 gave " + join(a));
  c.expect(join(b) == "2311322 2211222 1111111", "2312322 gave " + join(b));
  return c.done("2312321 -> " + join(a) + "; 2312322 -> " + join(b));
}

std::string report_line(const lab::VerificationReport& r) {
  std::ostringstream s;
  s << r.claim_id << " " << r.instances_checked << " instances, " << r.counterexamples.size() << " counterexamples";
  return s.str();
}

Outcome claims(std::initializer_list<std::string_view> ids, std::vector<lab::VerificationReport>& keep,
               const lab::CorpusSpec& spec = {}) {
  Checks c;
  std::string summary;
  for (auto id : ids) {
    auto r = lab::verify_claim(id, spec);
    c.expect(r.holds(), report_line(r));
    summary += (summary.empty() ? "" : "; ") + report_line(r);
    keep.push_back(std::move(r));
  }
  return c.done(summary);
}

Outcome determinism() {
  Checks c;
  // Traces: serialize twice for a few instances in both modes.
  const auto cyc = cyclic3_network();
  std::vector<std::string> names{"A", "B", "C", "D", "E", "F", "G"};
  for (auto digits : {"133221", "2312321", "2312322"}) {
    auto g = validate_colored_graph(std::string_view(digits).size() == 6 ? lab::cycle_graph(6) : lab::path_graph(7),
                                    seq(digits), cyc);
    for (Mode m : {Mode::Propagation, Mode::NonPropagation}) {
      auto a = io::trace_json(run(g, cyc, m), names).dump();
      auto b = io::trace_json(run(g, cyc, m), names).dump();
      c.expect(a == b, std::string("trace differs for ") + digits);
    }
  }
  // Reports: every claim's default corpus at 1 and 4 workers.
  std::size_t compared = 0;
  for (const auto& claim : lab::claims()) {
    lab::CorpusSpec one, many;
    many.workers = 4;
    auto a = io::report_json(lab::verify_claim(claim.id, one), false).dump();
    auto b = io::report_json(lab::verify_claim(claim.id, many), false).dump();
    c.expect(a == b, "report differs for " + std::string(claim.id));
    ++compared;
  }
  return c.done("traces identical across runs; " + std::to_string(compared) +
                " claim reports byte-identical at 1 vs 4 workers");
}

Outcome extremal() {
  Checks c;
  const auto cyc = cyclic3_network();
  auto r = lab::search_extremal(3, cyc);
  c.expect(!r.instances.empty(), "no instances");
  bool has_p3 = false;
  for (const auto& i : r.instances) {
    if (i.graph == lab::path_graph(3) && lab::coloring_string(i.coloring) == "123") has_p3 = true;
    auto t = run_with_propagation(i.graph, i.coloring, cyc);
    c.expect(*t.pfs_count == 2, "instance re-runs at " + std::to_string(*t.pfs_count));
  }
  c.expect(has_p3, "P3 123 missing");
  return c.done(std::to_string(r.instances.size()) + " instances with pfs_count 2, P3 123 included, all re-verified");
}

}  // namespace

int main() {
  std::vector<lab::VerificationReport> reports;
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "worked examples reproduced", worked_examples},
      {2, "seven-path sensitivity pair", sensitivity},
      {3, "PFS bound n-1", [&] { return claims({"pfs-bound"}, reports); }},
      {4, "tree diameter bound", [&] { return claims({"tree-diam"}, reports); }},
      {5, "acyclic networks terminate", [&] { return claims({"acyclic-terminates"}, reports); }},
      {6, "contraction commutes", [&] { return claims({"contract-commute"}, reports); }},
      {7, "monochrome end state", [&] { return claims({"monochrome-end"}, reports); }},
      {8, "classifier soundness",
       [&] { return claims({"two-color", "kn-all3", "kmn", "path-k5", "three-color-conditions", "r1-linear"}, reports); }},
      {9, "determinism and schedule independence", determinism},
      {10, "extremal search sanity", extremal},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << ", " << ms
              << " ms): " << o.detail << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (10 - failed) << "/10\n";
  return failed ? 1 : 0;
}
