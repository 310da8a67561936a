#pragma once

/*
  Ground truth by exhaustive enumeration.

  enumerate_min() walks every simple path from source to target and takes
  the minimum weight. With strictly positive edge weights this is exact:
  any walk that repeats a vertex contains a cycle of positive weight, so
  dropping the cycle gives a strictly lighter walk, and therefore some
  minimal-cost path is always simple. Enumeration is exponential on
  purpose; the vertex bound keeps it at desk scale, where its value is
  being obviously correct.
*/

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spath/error.hpp"
#include "spath/graph.hpp"

namespace spath {

inline constexpr std::uint32_t kDefaultOracleBound = 12;

struct OracleAnswer {
  std::optional<double> min_weight;       // empty = no path
  std::optional<Path> witness;            // present iff min_weight is
  std::uint64_t path_count = 0;           // simple paths source -> target
};

// Visits every simple path source -> target; fn receives the path and its
// weight. No vertex bound here: callers own the blast radius.
template <typename Fn>
void for_each_simple_path(const WeightedDigraph& g, VertexId source, VertexId target, Fn&& fn) {
  if (source >= g.vertex_count() || target >= g.vertex_count())
    throw Error(Errc::unknown_vertex, "vertex ordinal out of range");
  if (source == target)
    throw Error(Errc::source_equals_target, "path enumeration needs distinct endpoints");

  std::vector<bool> on_path(g.vertex_count(), false);
  Path path{source};
  on_path[source] = true;

  std::function<void(VertexId, double)> dfs = [&](VertexId u, double weight) {
    for (const Neighbor& nb : g.neighbors(u)) {
      if (on_path[nb.to]) continue;
      path.push_back(nb.to);
      if (nb.to == target) {
        fn(path, weight + nb.weight);
      } else {
        on_path[nb.to] = true;
        dfs(nb.to, weight + nb.weight);
        on_path[nb.to] = false;
      }
      path.pop_back();
    }
  };
  dfs(source, 0.0);
}

inline OracleAnswer enumerate_min(const WeightedDigraph& g, VertexId source, VertexId target,
                                  std::uint32_t vertex_bound = kDefaultOracleBound) {
  if (g.vertex_count() > vertex_bound)
    throw Error(Errc::graph_too_large, "graph has " + std::to_string(g.vertex_count()) +
                                           " vertices, oracle bound is " +
                                           std::to_string(vertex_bound));
  OracleAnswer ans;
  for_each_simple_path(g, source, target, [&](const Path& p, double w) {
    ++ans.path_count;
    if (!ans.min_weight || w < *ans.min_weight) {
      ans.min_weight = w;
      ans.witness = p;
    }
  });
  return ans;
}

// Seed-deterministic random graph for the property suites. Weights are drawn
// from a fixed-precision grid (multiples of `grid`) so sums compare exactly
// between the engine and the oracle; grid = 0 draws a continuous uniform.
// All n vertices v0..v{n-1} exist even when edgeless.
inline WeightedDigraph random_graph(std::uint32_t n, double edge_probability, double weight_low,
                                    double weight_high, GraphMode mode, std::uint64_t seed,
                                    double grid = 0.25) {
  if (n < 1) throw Error(Errc::invalid_argument, "random_graph needs n >= 1");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
    throw Error(Errc::invalid_argument, "edge_probability must be in [0, 1]");
  if (!(weight_low > 0.0) || !(weight_high >= weight_low) || !std::isfinite(weight_high))
    throw Error(Errc::bad_weight_range, "need 0 < low <= high, finite");

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(edge_probability);

  std::function<double()> draw;
  if (grid > 0.0) {
    auto k_lo = static_cast<std::int64_t>(std::ceil(weight_low / grid - 1e-12));
    auto k_hi = static_cast<std::int64_t>(std::floor(weight_high / grid + 1e-12));
    if (k_lo < 1) k_lo = 1;  // grid point 0 would be a zero weight
    if (k_lo > k_hi)
      throw Error(Errc::bad_weight_range, "no positive grid point inside the weight range");
    std::uniform_int_distribution<std::int64_t> pick(k_lo, k_hi);
    draw = [&rng, pick, grid]() mutable { return static_cast<double>(pick(rng)) * grid; };
  } else {
    std::uniform_real_distribution<double> pick(weight_low, weight_high);
    draw = [&rng, pick]() mutable { return pick(rng); };
  }

  GraphBuilder b(mode);
  std::vector<std::string> names(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    names[i] = "v" + std::to_string(i);
    b.add_vertex(names[i]);
  }
  if (mode == GraphMode::directed) {
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = 0; v < n; ++v)
        if (u != v && flip(rng)) b.add_edge(names[u], names[v], draw());
  } else {
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v)
        if (flip(rng)) b.add_edge(names[u], names[v], draw());
  }
  return b.build();
}

}  // namespace spath
