#pragma once

// Human-readable and structured renderings of traces, contractions,
// predictions and verification reports.

#include <sstream>
#include <string>

#include "mcf/classify.hpp"
#include "mcf/contraction.hpp"
#include "mcf/engine.hpp"
#include "mcf/io/instance.hpp"
#include "mcf/lab/verify.hpp"

namespace mcf::io {

inline std::string coloring_text(std::span<const Color> coloring, std::span<const std::string> names) {
  std::string out;
  for (VertexId v = 0; v < coloring.size(); ++v) {
    if (v) out += ' ';
    out += names[v] + "=" + to_string(coloring[v]);
  }
  return out;
}

inline Json coloring_json(std::span<const Color> coloring, std::span<const std::string> names) {
  Json out = Json::object();
  for (VertexId v = 0; v < coloring.size(); ++v) out[names[v]] = coloring[v].id();
  return out;
}

inline std::string summary_line(const ForcingTrace& trace) {
  std::ostringstream out;
  if (const auto* nt = std::get_if<NonTerminating>(&trace.outcome)) {
    out << "NonTerminating FS=" << trace.fs_count << " (state after FS " << nt->first_index
        << " repeats after FS " << nt->repeat_index << ")";
  } else {
    out << "Terminated FS=" << trace.fs_count;
    if (trace.pfs_count) out << " PFS=" << *trace.pfs_count;
  }
  return out.str();
}

inline std::string render_trace_text(const ForcingTrace& trace, std::span<const std::string> names) {
  std::ostringstream out;
  out << "mode: " << (trace.mode == Mode::Propagation ? "prop" : "noprop") << "\n";
  out << "initial: " << coloring_text(trace.initial.coloring, names) << "\n";
  for (const auto& e : trace.events) {
    out << "FS " << e.fs_index;
    if (e.pfs_index) out << " (PFS " << *e.pfs_index << ")";
    out << " rule " << to_string(e.rule) << ":";
    if (e.recolored.empty()) out << " (no change)";
    for (VertexId v : e.recolored) out << ' ' << names[v];
    out << "\n";
  }
  if (const auto* t = std::get_if<Terminated>(&trace.outcome)) {
    out << "final: " << coloring_text(t->final_state.coloring, names) << "\n";
  }
  out << "summary: " << summary_line(trace) << "\n";
  return out.str();
}

inline Json trace_json(const ForcingTrace& trace, std::span<const std::string> names) {
  Json out = Json::object();
  out["mode"] = trace.mode == Mode::Propagation ? "prop" : "noprop";
  out["initial"] = coloring_json(trace.initial.coloring, names);
  out["events"] = Json::array();
  for (const auto& e : trace.events) {
    Json ev = Json::object();
    ev["fs"] = e.fs_index;
    if (e.pfs_index) ev["pfs"] = *e.pfs_index;
    ev["rule"] = {e.rule.source.id(), e.rule.target.id()};
    ev["recolored"] = Json::array();
    for (VertexId v : e.recolored) ev["recolored"].push_back(names[v]);
    out["events"].push_back(std::move(ev));
  }
  Json outcome = Json::object();
  if (const auto* t = std::get_if<Terminated>(&trace.outcome)) {
    outcome["kind"] = "terminated";
    outcome["final"] = coloring_json(t->final_state.coloring, names);
  } else {
    const auto& nt = std::get<NonTerminating>(trace.outcome);
    outcome["kind"] = "non_terminating";
    outcome["first_index"] = nt.first_index;
    outcome["repeat_index"] = nt.repeat_index;
  }
  out["outcome"] = std::move(outcome);
  out["fs_count"] = trace.fs_count;
  if (trace.pfs_count) out["pfs_count"] = *trace.pfs_count;
  return out;
}

/// Applies the structured events to the structured initial coloring.
inline Json replay_trace_json(const Json& trace) {
  Json coloring = trace.at("initial");
  for (const auto& ev : trace.at("events")) {
    const int source = ev.at("rule").at(0).get<int>();
    for (const auto& name : ev.at("recolored")) coloring[name.get<std::string>()] = source;
  }
  return coloring;
}

/// Quotient vertex names join the member names with '+'.
inline std::vector<std::string> component_names(const ContractionMap& map, std::span<const std::string> names) {
  std::vector<std::string> out;
  for (const auto& comp : map.components) {
    std::string name;
    for (VertexId v : comp) {
      if (!name.empty()) name += '+';
      name += names[v];
    }
    out.push_back(std::move(name));
  }
  return out;
}

inline Json contraction_json(const ContractionMap& map, const ForcingNetwork& network,
                             std::span<const std::string> names) {
  const auto qnames = component_names(map, names);
  Json out = Json::object();
  out["components"] = Json::array();
  for (std::size_t i = 0; i < map.components.size(); ++i) {
    Json c = Json::object();
    c["name"] = qnames[i];
    c["color"] = map.quotient.coloring[i].id();
    c["members"] = Json::array();
    for (VertexId v : map.components[i]) c["members"].push_back(names[v]);
    out["components"].push_back(std::move(c));
  }
  out["quotient"] = to_json(to_document(network, map.quotient, qnames));
  return out;
}

inline std::string render_contraction_text(const ContractionMap& map, const ForcingNetwork& network,
                                           std::span<const std::string> names) {
  const auto qnames = component_names(map, names);
  std::ostringstream out;
  out << "components: " << map.components.size() << "\n";
  for (std::size_t i = 0; i < map.components.size(); ++i) {
    out << "  " << qnames[i] << " color " << map.quotient.coloring[i].id() << "\n";
  }
  out << "quotient:\n" << serialize_instance(to_document(network, map.quotient, qnames));
  return out.str();
}

inline Json counterexample_json(const lab::Counterexample& c) {
  Json out = Json::object();
  out["vertex_count"] = c.vertex_count;
  out["edges"] = Json::array();
  for (auto e : c.edges) out["edges"].push_back({e.u, e.v});
  out["coloring"] = Json::array();
  for (Color col : c.coloring) out["coloring"].push_back(col.id());
  out["palette"] = Json::array();
  for (Color col : c.palette) out["palette"].push_back(col.id());
  out["rules"] = Json::array();
  for (const auto& r : c.rules) out["rules"].push_back({r.source.id(), r.target.id()});
  out["expected"] = c.expected;
  out["observed"] = c.observed;
  return out;
}

/// `include_elapsed = false` gives a schedule-independent document.
inline Json report_json(const lab::VerificationReport& report, bool include_elapsed = true) {
  Json out = Json::object();
  out["claim_id"] = report.claim_id;
  out["instances_checked"] = report.instances_checked;
  out["counterexamples"] = Json::array();
  for (const auto& c : report.counterexamples) out["counterexamples"].push_back(counterexample_json(c));
  if (report.seed) out["seed"] = *report.seed;
  if (include_elapsed) out["elapsed_ms"] = report.elapsed.count();
  return out;
}

inline std::string render_report_text(const lab::VerificationReport& report) {
  std::ostringstream out;
  out << "claim " << report.claim_id << ": " << report.instances_checked << " instances, "
      << report.counterexamples.size() << " counterexamples";
  if (report.seed) out << ", seed " << *report.seed;
  out << ", " << report.elapsed.count() << " ms\n";
  for (const auto& c : report.counterexamples) {
    out << "  n=" << c.vertex_count << " edges=";
    for (auto e : c.edges) out << '(' << e.u << ',' << e.v << ')';
    out << " coloring=" << lab::coloring_string(c.coloring) << " rules=";
    for (const auto& r : c.rules) out << to_string(r) << ' ';
    out << "expected " << c.expected << ", observed " << c.observed << "\n";
  }
  return out.str();
}

}  // namespace mcf::io
