#pragma once

/*
  Label-setting shortest-path engine.

  run() grows the settled set one vertex per iteration: it picks the
  unsettled vertex with the least label (ties broken by smallest ordinal),
  settles it, then relaxes that vertex's unsettled out-neighbors, adopting
  a new label only on strict improvement and recording the predecessor at
  the same moment. Unreachability is a distinct Label state, never a
  numeric sentinel, so no arithmetic ever touches infinity.

  run_heap() is the priority-queue twin. It keys the heap by
  (cost, ordinal) so it settles exactly the same set with bit-identical
  labels; it exists so the two routes can check each other.
*/

#include <algorithm>
#include <cassert>
#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spath/error.hpp"
#include "spath/graph.hpp"

namespace spath {

// Tentative cost of reaching a vertex: a finite nonnegative value, or
// unreachable, which compares strictly greater than every finite label.
class Label {
 public:
  static constexpr Label unreachable() { return Label(); }
  static constexpr Label finite(double cost) { return Label(cost); }

  constexpr bool is_finite() const noexcept { return finite_; }

  double value() const {
    if (!finite_) throw std::logic_error("value() on unreachable label");
    return value_;
  }

  friend constexpr bool operator==(Label a, Label b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(Label a, Label b) {
    if (a.finite_ != b.finite_) return a.finite_;  // finite < unreachable
    return a.finite_ && a.value_ < b.value_;
  }
  friend constexpr bool operator>(Label a, Label b) { return b < a; }
  friend constexpr bool operator<=(Label a, Label b) { return !(b < a); }
  friend constexpr bool operator>=(Label a, Label b) { return !(a < b); }

 private:
  constexpr Label() = default;
  explicit constexpr Label(double v) : value_(v), finite_(true) {}

  double value_ = 0.0;
  bool finite_ = false;
};

// The pair label: cost plus the predecessor it was adopted from. pred is
// empty for the source and for vertices never relaxed.
struct PredecessorLabel {
  Label cost = Label::unreachable();
  std::optional<VertexId> pred;

  friend bool operator==(const PredecessorLabel&, const PredecessorLabel&) = default;
};

enum class RunMode { to_target, exhaustive, full };

enum class StopReason { target_settled, exhausted, all_settled };

struct RunResult {
  std::vector<PredecessorLabel> labels;  // indexed by ordinal; tentative for unsettled
  std::vector<VertexId> settled;         // visit order u_0..u_m
  StopReason stop_reason = StopReason::all_settled;
  VertexId source = 0;
  std::optional<VertexId> target;
};

// One relaxation attempt: new_label is the label after the min-update, so
// new_label < old_label exactly when adopted.
struct Relaxation {
  VertexId neighbor;
  Label old_label;
  Label new_label;
  bool adopted;
};

// One settling iteration (1-based), with the relaxations it performed on
// the entering vertex's unsettled out-neighbors, in ordinal order.
struct TraceEvent {
  int iteration = 0;
  VertexId entering = 0;
  Label entering_cost = Label::unreachable();
  std::vector<Relaxation> relaxations;
};

struct TracedRun {
  RunResult result;
  std::vector<TraceEvent> trace;
};

namespace detail {

inline void check_run_args(const WeightedDigraph& g, VertexId source,
                           std::optional<VertexId> target, RunMode mode) {
  if (source >= g.vertex_count())
    throw Error(Errc::unknown_vertex, "source ordinal " + std::to_string(source) + " out of range");
  if (mode == RunMode::to_target && !target)
    throw Error(Errc::invalid_argument, "to_target mode requires a target");
  if (target) {
    if (*target >= g.vertex_count())
      throw Error(Errc::unknown_vertex,
                  "target ordinal " + std::to_string(*target) + " out of range");
    if (mode == RunMode::to_target && *target == source)
      throw Error(Errc::source_equals_target, "target must differ from source");
  }
}

template <typename SelectMin>
RunResult run_impl(const WeightedDigraph& g, VertexId source, std::optional<VertexId> target,
                   RunMode mode, std::vector<TraceEvent>* trace, SelectMin select_min) {
  check_run_args(g, source, target, mode);

  const std::uint32_t n = g.vertex_count();
  RunResult r;
  r.source = source;
  r.target = target;
  r.labels.assign(n, PredecessorLabel{});
  r.labels[source].cost = Label::finite(0.0);
  std::vector<bool> settled(n, false);

  for (;;) {
    if (r.settled.size() == n) {
      r.stop_reason = StopReason::all_settled;
      break;
    }
    std::optional<VertexId> pick = select_min(r.labels, settled);
    if (!pick) {
      r.stop_reason = StopReason::exhausted;
      break;
    }
    VertexId u = *pick;
    settled[u] = true;
    r.settled.push_back(u);

    TraceEvent event;
    if (trace) {
      event.iteration = static_cast<int>(r.settled.size());
      event.entering = u;
      event.entering_cost = r.labels[u].cost;
    }

    if (mode == RunMode::to_target && u == *target) {
      // Stop the instant the target settles; its neighbors stay unrelaxed.
      if (trace) trace->push_back(std::move(event));
      r.stop_reason = StopReason::target_settled;
      break;
    }

    const double base = r.labels[u].cost.value();
    for (const Neighbor& nb : g.neighbors(u)) {
      if (settled[nb.to]) continue;
      Label old = r.labels[nb.to].cost;
      Label candidate = Label::finite(base + nb.weight);
      bool adopted = candidate < old;
      if (adopted) r.labels[nb.to] = {candidate, u};
      if (trace) event.relaxations.push_back({nb.to, old, adopted ? candidate : old, adopted});
    }
    if (trace) trace->push_back(std::move(event));
  }
  return r;
}

}  // namespace detail

// The linear-scan engine: selection is a pass over the unsettled vertices in
// ordinal order, so the first minimum wins ties by construction.
inline RunResult run(const WeightedDigraph& g, VertexId source,
                     std::optional<VertexId> target, RunMode mode,
                     std::vector<TraceEvent>* trace = nullptr) {
  auto select = [](const std::vector<PredecessorLabel>& labels,
                   const std::vector<bool>& settled) -> std::optional<VertexId> {
    std::optional<VertexId> best;
    for (VertexId v = 0; v < labels.size(); ++v) {
      if (settled[v]) continue;
      if (!best || labels[v].cost < labels[*best].cost) best = v;
    }
    if (best && !labels[*best].cost.is_finite()) return std::nullopt;  // exhausted
    return best;
  };
  return detail::run_impl(g, source, target, mode, trace, select);
}

inline TracedRun run_traced(const WeightedDigraph& g, VertexId source,
                            std::optional<VertexId> target, RunMode mode) {
  TracedRun out;
  out.result = run(g, source, target, mode, &out.trace);
  return out;
}

// Priority-queue engine. Heap keys are (cost, ordinal) with lazy deletion;
// the ordinal component reproduces the linear engine's tie-breaking, so both
// engines settle the same set with bit-identical labels.
inline RunResult run_heap(const WeightedDigraph& g, VertexId source,
                          std::optional<VertexId> target, RunMode mode) {
  detail::check_run_args(g, source, target, mode);
  const std::uint32_t n = g.vertex_count();
  RunResult r;
  r.source = source;
  r.target = target;
  r.labels.assign(n, PredecessorLabel{});
  r.labels[source].cost = Label::finite(0.0);
  std::vector<bool> settled(n, false);

  using Key = std::pair<double, VertexId>;
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> heap;
  heap.push({0.0, source});

  for (;;) {
    if (r.settled.size() == n) {
      r.stop_reason = StopReason::all_settled;
      break;
    }
    std::optional<VertexId> pick;
    while (!heap.empty()) {
      auto [cost, v] = heap.top();
      if (settled[v] || r.labels[v].cost != Label::finite(cost)) {
        heap.pop();  // stale entry
        continue;
      }
      pick = v;
      heap.pop();
      break;
    }
    if (!pick) {
      r.stop_reason = StopReason::exhausted;
      break;
    }
    VertexId u = *pick;
    settled[u] = true;
    r.settled.push_back(u);
    if (mode == RunMode::to_target && u == *target) {
      r.stop_reason = StopReason::target_settled;
      break;
    }
    const double base = r.labels[u].cost.value();
    for (const Neighbor& nb : g.neighbors(u)) {
      if (settled[nb.to]) continue;
      Label candidate = Label::finite(base + nb.weight);
      if (candidate < r.labels[nb.to].cost) {
        r.labels[nb.to] = {candidate, u};
        heap.push({candidate.value(), nb.to});
      }
    }
  }
  return r;
}

// Settled label of target after a to_target run, or empty when no path
// exists (the run exhausted).
inline std::optional<double> shortest_path_weight(const WeightedDigraph& g, VertexId source,
                                                  VertexId target) {
  RunResult r = run(g, source, target, RunMode::to_target);
  if (r.stop_reason != StopReason::target_settled) return std::nullopt;
  return r.labels[target].cost.value();
}

// Backward predecessor walk from target to the source, reversed. Empty when
// target was not settled (or is the source itself, which has no path of
// length >= 1).
inline std::optional<Path> reconstruct_path(const RunResult& result, VertexId target) {
  if (target >= result.labels.size())
    throw Error(Errc::unknown_vertex, "target ordinal " + std::to_string(target) + " out of range");
  if (target == result.source) return std::nullopt;
  const PredecessorLabel& tl = result.labels[target];
  if (!tl.cost.is_finite() || !tl.pred) return std::nullopt;
  bool settled = std::find(result.settled.begin(), result.settled.end(), target) !=
                 result.settled.end();
  if (!settled) return std::nullopt;

  Path path;
  std::optional<VertexId> cur = target;
  while (cur) {
    path.push_back(*cur);
    if (*cur == result.source) break;
    cur = result.labels[*cur].pred;
  }
  assert(!path.empty() && path.back() == result.source);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace spath
