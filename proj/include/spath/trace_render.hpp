#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "spath/dijkstra.hpp"
#include "spath/graph.hpp"
#include "spath/graph_io.hpp"

namespace spath {

enum class OutputFormat { text, json };

inline std::string format_label(const Label& l) {
  return l.is_finite() ? format_weight(l.value()) : "inf";
}

inline nlohmann::ordered_json label_to_json(const Label& l) {
  if (!l.is_finite()) return nullptr;
  return l.value();
}

inline nlohmann::ordered_json trace_to_json(const WeightedDigraph& g,
                                            const std::vector<TraceEvent>& events) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TraceEvent& ev : events) {
    nlohmann::ordered_json relaxations = nlohmann::ordered_json::array();
    for (const Relaxation& rx : ev.relaxations) {
      relaxations.push_back({{"neighbor", g.name(rx.neighbor)},
                             {"old", label_to_json(rx.old_label)},
                             {"new", label_to_json(rx.new_label)},
                             {"adopted", rx.adopted}});
    }
    arr.push_back({{"iteration", ev.iteration},
                   {"entering", g.name(ev.entering)},
                   {"entering_cost", label_to_json(ev.entering_cost)},
                   {"relaxations", relaxations}});
  }
  return arr;
}

// Text form, one block per iteration:
//   [1] settle a cost=0
//     relax z: inf -> 5 (adopted)
// Byte-stable so golden files can pin it down.
inline std::string render_trace(const WeightedDigraph& g, const std::vector<TraceEvent>& events,
                                OutputFormat format = OutputFormat::text) {
  if (format == OutputFormat::json) return trace_to_json(g, events).dump(2);
  std::string out;
  for (const TraceEvent& ev : events) {
    out += "[" + std::to_string(ev.iteration) + "] settle " + g.name(ev.entering) +
           " cost=" + format_label(ev.entering_cost) + "\n";
    for (const Relaxation& rx : ev.relaxations) {
      out += "  relax " + g.name(rx.neighbor) + ": " + format_label(rx.old_label) + " -> " +
             format_label(rx.new_label) + (rx.adopted ? " (adopted)" : " (kept)") + "\n";
    }
  }
  return out;
}

}  // namespace spath
