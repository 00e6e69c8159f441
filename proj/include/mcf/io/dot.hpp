#pragma once

// Minimal DOT support for colored graphs.
//
// Import accepts an undirected `graph { ... }` with node statements carrying a
// numeric `color` attribute and edge statements (chains allowed):
//
//   graph G {
//     a [color=1]; b [color=2]; c [color="3"];
//     a -- b -- c;
//   }
//
// Default-attribute statements (`graph [...]`, `node [...]`, `edge [...]`) and
// `key=value` graph attributes are skipped. The forcing network is not part
// of the file; callers supply it.

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mcf/io/instance.hpp"

namespace mcf::io {

namespace detail {

struct DotToken {
  enum class Kind { Id, Punct, End } kind;
  std::string text;
};

class DotLexer {
 public:
  explicit DotLexer(std::string_view src) : src_(src) {}

  DotToken next() {
    skip_space_and_comments();
    if (pos_ >= src_.size()) return {DotToken::Kind::End, {}};
    const char c = src_[pos_];
    if (c == '"') return {DotToken::Kind::Id, quoted()};
    if (src_.compare(pos_, 2, "--") == 0) {
      pos_ += 2;
      return {DotToken::Kind::Punct, "--"};
    }
    if (src_.compare(pos_, 2, "->") == 0) parse_fail("directed edges are not supported");
    if (std::string_view("{}[];,=:").find(c) != std::string_view::npos) {
      ++pos_;
      return {DotToken::Kind::Punct, std::string(1, c)};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
      std::size_t start = pos_;
      while (pos_ < src_.size()) {
        const char d = src_[pos_];
        if (!(std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.')) {
          if (!(d == '-' && pos_ == start)) break;
        }
        ++pos_;
      }
      return {DotToken::Kind::Id, std::string(src_.substr(start, pos_ - start))};
    }
    parse_fail(std::string("unexpected character '") + c + "' in DOT input");
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' || src_.compare(pos_, 2, "//") == 0) {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (src_.compare(pos_, 2, "/*") == 0) {
        auto end = src_.find("*/", pos_ + 2);
        if (end == std::string_view::npos) parse_fail("unterminated comment");
        pos_ = end + 2;
      } else {
        return;
      }
    }
  }

  std::string quoted() {
    std::string out;
    ++pos_;
    while (pos_ < src_.size() && src_[pos_] != '"') {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) ++pos_;
      out += src_[pos_++];
    }
    if (pos_ >= src_.size()) parse_fail("unterminated string");
    ++pos_;
    return out;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

struct DotGraph {
  std::vector<std::string> vertices;  // first-appearance order
  std::vector<std::pair<std::string, std::string>> edges;
  std::map<std::string, int> colors;
};

inline DotGraph parse_dot(std::string_view text) {
  using detail::DotToken;
  detail::DotLexer lex(text);
  DotGraph g;
  std::map<std::string, bool> known;
  auto touch = [&](const std::string& name) {
    if (known.emplace(name, true).second) g.vertices.push_back(name);
  };

  DotToken tok = lex.next();
  if (tok.kind == DotToken::Kind::Id && tok.text == "strict") tok = lex.next();
  if (tok.kind != DotToken::Kind::Id || (tok.text != "graph")) {
    if (tok.kind == DotToken::Kind::Id && tok.text == "digraph") detail::parse_fail("directed graphs are not supported");
    detail::parse_fail("DOT input must start with 'graph'");
  }
  tok = lex.next();
  if (tok.kind == DotToken::Kind::Id) tok = lex.next();
  if (tok.text != "{") detail::parse_fail("expected '{'");

  // Attribute list after '[' has been consumed; returns key/value pairs.
  auto attributes = [&]() {
    std::map<std::string, std::string> attrs;
    for (;;) {
      DotToken key = lex.next();
      if (key.kind == DotToken::Kind::Punct && key.text == "]") return attrs;
      if (key.kind == DotToken::Kind::Punct && (key.text == "," || key.text == ";")) continue;
      if (key.kind != DotToken::Kind::Id) detail::parse_fail("expected an attribute name");
      DotToken eq = lex.next();
      if (eq.text != "=") detail::parse_fail("expected '=' after attribute '" + key.text + "'");
      DotToken value = lex.next();
      if (value.kind != DotToken::Kind::Id) detail::parse_fail("expected a value for attribute '" + key.text + "'");
      attrs[key.text] = value.text;
    }
  };

  tok = lex.next();
  for (;;) {
    if (tok.kind == DotToken::Kind::End) detail::parse_fail("missing closing '}'");
    if (tok.kind == DotToken::Kind::Punct) {
      if (tok.text == "}") break;
      if (tok.text == ";") {
        tok = lex.next();
        continue;
      }
      detail::parse_fail("unexpected '" + tok.text + "'");
    }
    const std::string first = tok.text;
    tok = lex.next();
    if (first == "graph" || first == "node" || first == "edge") {
      if (tok.text == "[") {
        attributes();
        tok = lex.next();
      }
      continue;
    }
    if (tok.text == "=") {  // graph attribute
      lex.next();
      tok = lex.next();
      continue;
    }
    if (tok.text == ":") detail::parse_fail("ports are not supported");
    touch(first);
    if (tok.text == "--") {
      std::string prev = first;
      while (tok.text == "--") {
        DotToken next = lex.next();
        if (next.kind != DotToken::Kind::Id) detail::parse_fail("expected a vertex after '--'");
        touch(next.text);
        g.edges.emplace_back(prev, next.text);
        prev = next.text;
        tok = lex.next();
      }
      if (tok.text == "[") {
        attributes();
        tok = lex.next();
      }
      continue;
    }
    if (tok.text == "[") {
      auto attrs = attributes();
      if (auto it = attrs.find("color"); it != attrs.end()) {
        try {
          std::size_t used = 0;
          int c = std::stoi(it->second, &used);
          if (used != it->second.size()) throw std::invalid_argument("trailing");
          g.colors[first] = c;
        } catch (const std::exception&) {
          detail::parse_fail("vertex '" + first + "' has non-numeric color '" + it->second + "'");
        }
      }
      tok = lex.next();
    }
  }
  return g;
}

/// Combines a DOT graph with a separately supplied network.
inline InstanceDocument document_from_dot(const DotGraph& g, const ForcingNetwork& network) {
  InstanceDocument doc;
  for (Color c : network.palette()) doc.palette.push_back(c.id());
  for (const auto& r : network.rules()) doc.rules.emplace_back(r.source.id(), r.target.id());
  doc.vertices = g.vertices;
  doc.edges = g.edges;
  for (const auto& name : g.vertices) {
    if (auto it = g.colors.find(name); it != g.colors.end()) doc.coloring.emplace_back(name, it->second);
  }
  return doc;
}

/// DOT rendering; `color` holds the palette id, the fill uses the set19
/// scheme so ids 1..9 render as distinct colors.
inline std::string to_dot(const ColoredGraph& graph, std::span<const std::string> names, std::span<const Color> coloring) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph G {\n  node [colorscheme=set19, style=filled];\n";
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    const int c = coloring[v].id();
    out << "  " << quote(names[v]) << " [color=" << c << ", fillcolor=" << c << ", label="
        << quote(names[v] + ":" + std::to_string(c)) << "];\n";
  }
  for (auto e : graph.graph.edges()) out << "  " << quote(names[e.u]) << " -- " << quote(names[e.v]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mcf::io
