// mcf: command-line front end for the forcing engine, classifiers and lab.
//
// Exit codes: 0 ok/terminated, 1 input error, 2 non-termination,
// 3 unknown classification, 4 counterexamples or a failed --check.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcf/mcf.hpp"

namespace {

enum Exit { Ok = 0, InputError = 1, NonTermination = 2, UnknownClass = 3, Counterexamples = 4 };

struct NetworkFlags {
  std::string network;  // cyclic3 | r1
  std::vector<int> palette;
  std::vector<std::string> rules;  // "s:t"
};

void add_network_flags(CLI::App* cmd, NetworkFlags& f) {
  cmd->add_option("--network", f.network, "Named network: cyclic3 or r1")->check(CLI::IsMember({"cyclic3", "r1"}));
  cmd->add_option("--palette", f.palette, "Palette colors (with --rules)")->delimiter(',');
  cmd->add_option("--rules", f.rules, "Ordered rules as s:t pairs, e.g. 1:2,2:3,3:1")->delimiter(',');
}

std::optional<mcf::ForcingNetwork> network_from_flags(const NetworkFlags& f) {
  if (!f.network.empty()) {
    if (!f.palette.empty() || !f.rules.empty()) {
      throw mcf::Error(mcf::Errc::InvalidParams, "--network cannot be combined with --palette/--rules");
    }
    return f.network == "r1" ? mcf::linear_r1_network() : mcf::cyclic3_network();
  }
  if (f.palette.empty() && f.rules.empty()) return std::nullopt;
  std::vector<std::pair<int, int>> rules;
  for (const auto& r : f.rules) {
    auto colon = r.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(r);
      rules.emplace_back(std::stoi(r.substr(0, colon)), std::stoi(r.substr(colon + 1)));
    } catch (const std::exception&) {
      throw mcf::Error(mcf::Errc::ParseError, "rule '" + r + "' is not of the form s:t");
    }
  }
  return mcf::io::network_from(f.palette, rules);
}

bool is_dot_path(const std::string& path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  return ends_with(".dot") || ends_with(".gv");
}

// JSON instance files carry their own network; DOT files take it from flags
// (3-cyclic when none is given). Flags override a JSON file's network.
mcf::io::Instance load_instance(const std::string& path, const NetworkFlags& flags) {
  const std::string text = mcf::io::read_file(path);
  const auto net = network_from_flags(flags);
  if (is_dot_path(path)) {
    auto doc = mcf::io::document_from_dot(mcf::io::parse_dot(text), net.value_or(mcf::cyclic3_network()));
    return mcf::io::bind(doc);
  }
  auto doc = mcf::io::parse_instance(text);
  if (net) {
    doc.palette.clear();
    doc.rules.clear();
    for (mcf::Color c : net->palette()) doc.palette.push_back(c.id());
    for (const auto& r : net->rules()) doc.rules.emplace_back(r.source.id(), r.target.id());
  }
  return mcf::io::bind(doc);
}

void print_json(const mcf::io::Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_run(const std::string& path, const NetworkFlags& flags, const std::string& mode_name,
            const std::string& output, std::optional<std::size_t> max_fs) {
  const auto inst = load_instance(path, flags);
  const mcf::Mode mode = mode_name == "noprop" ? mcf::Mode::NonPropagation : mcf::Mode::Propagation;
  mcf::ForcingTrace trace;
  try {
    trace = mcf::run(inst.graph, inst.network, mode, {.limit = max_fs, .record_events = true});
  } catch (const mcf::Error& e) {
    if (e.code() != mcf::Errc::LimitExceeded) throw;
    std::cerr << "mcf: " << e.what() << "\n";
    return NonTermination;
  }
  if (output == "structured") {
    print_json(mcf::io::trace_json(trace, inst.names));
  } else if (output == "dot") {
    std::cout << mcf::io::to_dot(inst.graph, inst.names, mcf::replay(trace));
  } else {
    std::cout << mcf::io::render_trace_text(trace, inst.names);
  }
  return trace.terminated() ? Ok : NonTermination;
}

int cmd_contract(const std::string& path, const NetworkFlags& flags, const std::string& output) {
  const auto inst = load_instance(path, flags);
  const auto map = mcf::color_contract(inst.graph);
  if (output == "structured") {
    print_json(mcf::io::contraction_json(map, inst.network, inst.names));
  } else if (output == "dot") {
    const auto qnames = mcf::io::component_names(map, inst.names);
    std::cout << mcf::io::to_dot(map.quotient, qnames, map.quotient.coloring);
  } else {
    std::cout << mcf::io::render_contraction_text(map, inst.network, inst.names);
  }
  return Ok;
}

int cmd_classify(const std::string& path, const NetworkFlags& flags, bool check, const std::string& output) {
  const auto inst = load_instance(path, flags);
  const auto prediction = mcf::predict(inst.graph, inst.network);
  std::optional<bool> agrees;
  std::string observed;
  if (check) {
    // Propagation mode; the classified networks always terminate there.
    const auto trace = mcf::run_with_propagation(inst.graph, inst.network);
    const auto end = mcf::end_state(trace).coloring;
    observed = mcf::lab::coloring_string(end);
    if (prediction.known()) {
      agrees = std::all_of(end.begin(), end.end(), [&](mcf::Color c) { return c == *prediction.color; });
    }
  }
  if (output == "structured") {
    mcf::io::Json j = mcf::io::Json::object();
    j["prediction"] = prediction.known() ? "monochrome" : "unknown";
    if (prediction.known()) {
      j["color"] = prediction.color->id();
      j["basis"] = mcf::basis_name(prediction.basis);
    }
    if (check) {
      j["engine_end_state"] = observed;
      if (agrees) j["agrees"] = *agrees;
    }
    print_json(j);
  } else {
    std::cout << mcf::to_string(prediction) << "\n";
    if (check) {
      std::cout << "engine end state: " << observed << "\n";
      if (agrees) std::cout << "check: " << (*agrees ? "agrees" : "DISAGREES") << "\n";
    }
  }
  if (agrees && !*agrees) return Counterexamples;
  return prediction.known() ? Ok : UnknownClass;
}

struct VerifyFlags {
  std::string claim;
  std::optional<std::size_t> n_min, n_max, random, random_n_max;
  std::uint64_t seed = 1;
  std::size_t budget = mcf::lab::default_budget;
  std::size_t workers = 1;
  bool no_elapsed = false;
  bool list = false;
};

int cmd_verify(const VerifyFlags& f, const std::string& output) {
  if (f.list) {
    for (const auto& c : mcf::lab::claims()) std::cout << c.id << "  " << c.statement << "\n";
    return Ok;
  }
  if (f.claim.empty()) throw mcf::Error(mcf::Errc::UnknownClaim, "no claim given (use --list)");
  mcf::lab::CorpusSpec spec;
  spec.n_min = f.n_min;
  spec.n_max = f.n_max;
  spec.random_instances = f.random;
  spec.random_n_max = f.random_n_max;
  spec.seed = f.seed;
  spec.workers = std::max<std::size_t>(1, f.workers);
  spec.budget = f.budget;
  const auto report = mcf::lab::verify_claim(f.claim, spec);
  if (output == "structured") {
    print_json(mcf::io::report_json(report, !f.no_elapsed));
  } else {
    std::cout << mcf::io::render_report_text(report);
  }
  return report.holds() ? Ok : Counterexamples;
}

struct EnumerateFlags {
  std::string family = "path";
  std::size_t n = 3;
  std::size_t m = 0;
  double p = 0.3;
  std::optional<std::uint64_t> seed;
  std::vector<int> palette{1, 2, 3};
  bool all_colors = false;
  bool contracted = false;
  std::size_t budget = mcf::lab::default_budget;
  bool count_only = false;
};

int cmd_enumerate(const EnumerateFlags& f, const std::string& output) {
  auto family = mcf::lab::parse_family(f.family);
  if (!family) throw mcf::Error(mcf::Errc::InvalidParams, "unknown family '" + f.family + "'");
  const mcf::Graph g = mcf::lab::generate_family(*family, {f.n, f.m, f.p}, f.seed);
  std::vector<mcf::Color> palette;
  for (int c : f.palette) palette.emplace_back(c);
  mcf::lab::ColoringEnumerator e(g, palette, {f.all_colors, f.contracted}, f.budget);

  std::size_t count = 0;
  mcf::io::Json list = mcf::io::Json::array();
  while (e.next()) {
    ++count;
    if (f.count_only) continue;
    if (output == "structured") {
      mcf::io::Json c = mcf::io::Json::array();
      for (mcf::Color col : e.current()) c.push_back(col.id());
      list.push_back(std::move(c));
    } else {
      std::cout << mcf::lab::coloring_string(e.current()) << "\n";
    }
  }
  if (output == "structured") {
    mcf::io::Json j = mcf::io::Json::object();
    j["family"] = f.family;
    j["vertex_count"] = g.vertex_count();
    j["edges"] = mcf::io::Json::array();
    for (auto ed : g.edges()) j["edges"].push_back({ed.u, ed.v});
    j["count"] = count;
    if (!f.count_only) j["colorings"] = std::move(list);
    print_json(j);
  } else {
    std::cout << "count: " << count << "\n";
  }
  return Ok;
}

int cmd_search(std::size_t n, const NetworkFlags& flags, std::size_t budget, std::uint64_t seed,
               const std::string& output) {
  const auto net = network_from_flags(flags).value_or(mcf::cyclic3_network());
  const auto result = mcf::lab::search_extremal(n, net, budget, seed);
  if (output == "structured") {
    mcf::io::Json j = mcf::io::Json::object();
    j["n"] = n;
    j["exhaustive"] = result.exhaustive;
    j["instances_checked"] = result.instances_checked;
    j["instances"] = mcf::io::Json::array();
    for (const auto& inst : result.instances) {
      mcf::io::Json i = mcf::io::Json::object();
      i["edges"] = mcf::io::Json::array();
      for (auto e : inst.graph.edges()) i["edges"].push_back({e.u, e.v});
      i["coloring"] = mcf::io::Json::array();
      for (mcf::Color c : inst.coloring) i["coloring"].push_back(c.id());
      i["pfs_count"] = inst.pfs_count;
      j["instances"].push_back(std::move(i));
    }
    print_json(j);
  } else {
    std::cout << result.instances.size() << " instances with pfs_count " << (n - 1) << " ("
              << (result.exhaustive ? "exhaustive" : "sampled, partial") << ", " << result.instances_checked
              << " checked)\n";
    for (const auto& inst : result.instances) {
      std::cout << "  edges=";
      for (auto e : inst.graph.edges()) std::cout << '(' << e.u << ',' << e.v << ')';
      std::cout << " coloring=" << mcf::lab::coloring_string(inst.coloring) << "\n";
    }
  }
  return Ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-color forcing on graphs"};
  app.require_subcommand(1);
  std::string output = "text";
  app.add_option("--output", output, "Output format: text, structured or dot")
      ->check(CLI::IsMember({"text", "structured", "dot"}))
      ->capture_default_str();

  std::string path;
  NetworkFlags net;

  std::string mode = "prop";
  std::optional<std::size_t> max_fs;
  auto* run = app.add_subcommand("run", "Run the forcing process and print its trace");
  run->add_option("file", path, "Instance file (.json, or .dot/.gv)")->required();
  run->add_option("--mode", mode, "prop or noprop")->check(CLI::IsMember({"prop", "noprop"}))->capture_default_str();
  run->add_option("--max-fs", max_fs, "Bound on forcing steps");
  add_network_flags(run, net);

  auto* contract = app.add_subcommand("contract", "Color-contract an instance");
  contract->add_option("file", path, "Instance file")->required();
  add_network_flags(contract, net);

  bool check = false;
  auto* classify = app.add_subcommand("classify", "Predict the end state without running the engine");
  classify->add_option("file", path, "Instance file")->required();
  classify->add_flag("--check", check, "Also run the engine and compare");
  add_network_flags(classify, net);

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Check a claim over a corpus");
  verify->add_option("claim", vf.claim, "Claim id (see --list)");
  verify->add_flag("--list", vf.list, "List registered claims");
  verify->add_option("--n-min", vf.n_min, "Smallest exhaustive vertex count");
  verify->add_option("--n-max", vf.n_max, "Largest exhaustive vertex count");
  verify->add_option("--random", vf.random, "Number of random instances");
  verify->add_option("--random-n-max", vf.random_n_max, "Largest random vertex count");
  verify->add_option("--seed", vf.seed, "Seed for the random part")->capture_default_str();
  verify->add_option("--budget", vf.budget, "Maximum engine runs")->capture_default_str();
  verify->add_option("--workers", vf.workers, "Parallel workers")->capture_default_str();
  verify->add_flag("--no-elapsed", vf.no_elapsed, "Omit elapsed_ms from structured output");

  EnumerateFlags ef;
  auto* enumerate = app.add_subcommand("enumerate", "List colorings of a generated graph");
  enumerate->add_option("--family", ef.family, "path, cycle, complete, complete_bipartite, star, random_tree, random_connected")
      ->capture_default_str();
  enumerate->add_option("--n", ef.n, "Vertex count (second part for complete_bipartite)")->capture_default_str();
  enumerate->add_option("--m", ef.m, "First part size for complete_bipartite");
  enumerate->add_option("--p", ef.p, "Extra-edge probability for random_connected");
  enumerate->add_option("--seed", ef.seed, "Seed for random families");
  enumerate->add_option("--palette", ef.palette, "Palette colors")->delimiter(',');
  enumerate->add_flag("--all-colors", ef.all_colors, "Only colorings using every color");
  enumerate->add_flag("--contracted", ef.contracted, "Only colorings with no monochromatic edge");
  enumerate->add_option("--budget", ef.budget, "Maximum colorings to scan")->capture_default_str();
  enumerate->add_flag("--count", ef.count_only, "Print only the count");

  std::size_t search_n = 3;
  std::size_t search_budget = mcf::lab::default_budget;
  std::uint64_t search_seed = 1;
  auto* search = app.add_subcommand("search", "Find instances needing exactly n-1 propagating steps");
  search->add_option("--n", search_n, "Vertex count")->capture_default_str();
  search->add_option("--budget", search_budget, "Maximum engine runs")->capture_default_str();
  search->add_option("--seed", search_seed, "Seed when sampling")->capture_default_str();
  add_network_flags(search, net);

  // Subcommand options fall through to the parent so --output works anywhere.
  for (auto* sub : {run, contract, classify, verify, enumerate, search}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : InputError;
  }

  try {
    if (*run) return cmd_run(path, net, mode, output, max_fs);
    if (*contract) return cmd_contract(path, net, output);
    if (*classify) return cmd_classify(path, net, check, output);
    if (*verify) return cmd_verify(vf, output);
    if (*enumerate) return cmd_enumerate(ef, output);
    if (*search) return cmd_search(search_n, net, search_budget, search_seed, output);
  } catch (const mcf::Error& e) {
    std::cerr << "mcf: " << e.what() << "\n";
    return InputError;
  }
  return InputError;
}
