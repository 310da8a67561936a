#pragma once

/*
  Finite weighted digraphs with strictly positive edge weights.

  Vertices are interned in first-mention order; the resulting dense ordinal
  is the tie-breaking order used everywhere else in the library. Undirected
  graphs are stored as symmetric digraphs (each input edge installs both
  directions). A built graph is immutable and safe to share across threads.
*/

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spath/error.hpp"

namespace spath {

// Dense 0-based vertex ordinal. Names are resolved through the graph.
using VertexId = std::uint32_t;

enum class GraphMode { directed, undirected };

// One input edge, by vertex name.
struct EdgeSpec {
  std::string from;
  std::string to;
  double weight;
};

// Adjacency entry: target vertex plus edge weight.
struct Neighbor {
  VertexId to;
  double weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct Edge {
  VertexId from;
  VertexId to;
  double weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A path is a vertex sequence of at least one edge; validity against a
// concrete graph is checked where it matters (path_weight).
using Path = std::vector<VertexId>;

inline bool is_valid_weight(double w) { return std::isfinite(w) && w > 0.0; }

class GraphBuilder;

class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  std::uint32_t vertex_count() const noexcept { return static_cast<std::uint32_t>(names_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  GraphMode mode() const noexcept { return mode_; }

  const std::string& name(VertexId v) const {
    check_vertex(v);
    return names_[v];
  }

  std::optional<VertexId> find_vertex(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  // Like find_vertex but throws; used where a missing name is a caller error.
  VertexId vertex(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v) throw Error(Errc::unknown_vertex, "unknown vertex '" + std::string(name) + "'");
    return *v;
  }

  // Out-neighbors of u, sorted ascending by neighbor ordinal.
  std::span<const Neighbor> neighbors(VertexId u) const {
    check_vertex(u);
    return adj_[u];
  }

  std::optional<double> edge_weight(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& row = adj_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const Neighbor& n, VertexId id) { return n.to < id; });
    if (it == row.end() || it->to != v) return std::nullopt;
    return it->weight;
  }

  // All edges, sorted by (from, to) ordinal.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u)
      for (const Neighbor& n : adj_[u]) out.push_back({u, n.to, n.weight});
    return out;
  }

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

 private:
  friend class GraphBuilder;

  void check_vertex(VertexId v) const {
    if (v >= names_.size())
      throw Error(Errc::unknown_vertex, "vertex ordinal " + std::to_string(v) + " out of range");
  }

  GraphMode mode_ = GraphMode::directed;
  std::vector<std::string> names_;                   // ordinal -> name
  std::unordered_map<std::string, VertexId> ids_;    // name -> ordinal
  std::vector<std::vector<Neighbor>> adj_;           // sorted by .to
  std::size_t edge_count_ = 0;
};

// Incremental construction with validation at each step. In undirected mode
// every edge installs both directions; re-stating an existing pair with the
// same weight is a no-op there, while a conflicting weight is an error.
class GraphBuilder {
 public:
  explicit GraphBuilder(GraphMode mode) : mode_(mode) {}

  VertexId add_vertex(std::string_view name) {
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    VertexId id = static_cast<VertexId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
  }

  void add_edge(std::string_view from, std::string_view to, double weight) {
    if (!is_valid_weight(weight))
      throw Error(Errc::bad_weight, "edge weight must be a finite positive number");
    if (from == to)
      throw Error(Errc::self_loop, "self-loop on vertex '" + std::string(from) + "'");
    VertexId u = add_vertex(from);
    VertexId v = add_vertex(to);
    if (mode_ == GraphMode::directed) {
      install(u, v, weight, from, to);
    } else {
      install(u, v, weight, from, to);
      install(v, u, weight, to, from);
    }
  }

  WeightedDigraph build() {
    WeightedDigraph g;
    g.mode_ = mode_;
    g.names_ = std::move(names_);
    g.ids_ = std::move(ids_);
    g.adj_.resize(g.names_.size());
    for (const auto& [pair, w] : edges_) g.adj_[pair.first].push_back({pair.second, w});
    g.edge_count_ = edges_.size();
    names_.clear();
    ids_.clear();
    edges_.clear();
    return g;
  }

 private:
  void install(VertexId u, VertexId v, double w, std::string_view uname, std::string_view vname) {
    auto [it, inserted] = edges_.try_emplace({u, v}, w);
    if (inserted) return;
    if (mode_ == GraphMode::undirected && it->second == w) return;
    throw Error(Errc::duplicate_edge,
                "duplicate edge " + std::string(uname) + " -> " + std::string(vname));
  }

  GraphMode mode_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> ids_;
  std::map<std::pair<VertexId, VertexId>, double> edges_;  // keeps adjacency sorted
};

// Builds a graph from edge triples; extra_vertices interns vertices that have
// no incident edges (they come first, in the order given).
inline WeightedDigraph build_graph(std::span<const EdgeSpec> triples, GraphMode mode,
                                   std::span<const std::string> extra_vertices = {}) {
  GraphBuilder b(mode);
  for (const auto& name : extra_vertices) b.add_vertex(name);
  for (const auto& t : triples) b.add_edge(t.from, t.to, t.weight);
  return b.build();
}

inline WeightedDigraph build_graph(std::initializer_list<EdgeSpec> triples, GraphMode mode) {
  return build_graph(std::span<const EdgeSpec>(triples.begin(), triples.size()), mode);
}

// Sum of edge weights along p, left to right. Throws MissingEdge on the first
// consecutive pair that is not an edge of g.
inline double path_weight(const WeightedDigraph& g, const Path& p) {
  if (p.size() < 2) throw Error(Errc::invalid_path, "a path needs at least one edge");
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    auto w = g.edge_weight(p[i], p[i + 1]);
    if (!w)
      throw Error(Errc::missing_edge,
                  "missing edge " + g.name(p[i]) + " -> " + g.name(p[i + 1]));
    total += *w;
  }
  return total;
}

}  // namespace spath
