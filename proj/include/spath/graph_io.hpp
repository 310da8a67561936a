#pragma once

/*
  Graph file format:

    # comment lines and blank lines are ignored
    directed            <- mandatory mode line, first significant line
    a                   <- single token: declares a vertex (for isolated ones)
    a b 2.5             <- edge line: from, to, positive weight
    b c 3

  In undirected mode every edge line installs both directions. CRLF input is
  tolerated. Errors carry the 1-based line number.
*/

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spath/error.hpp"
#include "spath/graph.hpp"

namespace spath {

// Shortest decimal form that round-trips: 5 -> "5", 6.5 -> "6.5".
inline std::string format_weight(double w) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, res.ptr);
}

// Same, but with at least one fractional digit: 6 -> "6.0". Used where the
// output is a headline weight rather than a table cell.
inline std::string format_weight_decimal(double w) {
  std::string s = format_weight(w);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
    s += ".0";
  return s;
}

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

inline double parse_weight_token(std::string_view tok, int line_no) {
  double value = 0.0;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
    throw Error(Errc::syntax, "cannot parse weight '" + std::string(tok) + "'", line_no);
  return value;
}

}  // namespace detail

inline WeightedDigraph parse_graph_file(std::string_view text) {
  std::optional<GraphBuilder> builder;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;

    auto tokens = detail::split_tokens(line);
    if (tokens.empty()) continue;

    if (!builder) {
      if (tokens.size() == 1 && (tokens[0] == "directed" || tokens[0] == "undirected")) {
        builder.emplace(tokens[0] == "directed" ? GraphMode::directed : GraphMode::undirected);
        continue;
      }
      throw Error(Errc::syntax, "expected mode line ('directed' or 'undirected')", line_no);
    }

    if (tokens.size() == 1) {
      if (tokens[0] == "directed" || tokens[0] == "undirected")
        throw Error(Errc::syntax, "duplicate mode line", line_no);
      builder->add_vertex(tokens[0]);
      continue;
    }
    if (tokens.size() == 3) {
      double w = detail::parse_weight_token(tokens[2], line_no);
      try {
        builder->add_edge(tokens[0], tokens[1], w);
      } catch (const Error& e) {
        throw Error(e.code(), e.what(), line_no);
      }
      continue;
    }
    throw Error(Errc::syntax, "expected 'name', 'u v w', or comment", line_no);
  }
  if (!builder) throw Error(Errc::syntax, "missing mode line", line_no);
  return builder->build();
}

// Canonical form: mode line, every vertex in ordinal order, then edge lines
// sorted by ordinal pair (one line per unordered pair for undirected graphs).
// parse_graph_file(serialize_graph(g)) reproduces g exactly, ordinals
// included, and serialization is byte-stable.
inline std::string serialize_graph(const WeightedDigraph& g) {
  std::ostringstream out;
  out << (g.mode() == GraphMode::directed ? "directed" : "undirected") << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) out << g.name(v) << '\n';
  for (const Edge& e : g.edges()) {
    if (g.mode() == GraphMode::undirected && e.from > e.to) continue;
    out << g.name(e.from) << ' ' << g.name(e.to) << ' ' << format_weight(e.weight) << '\n';
  }
  return out.str();
}

}  // namespace spath
