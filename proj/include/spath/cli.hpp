#pragma once

/*
  spath — shortest-path CLI.

    spath route --graph F --source A --target Z [--trace] [--format text|json]
    spath sssp  --graph F --source A [--format text|json]
    spath check --graph F --source A --target Z

  Exit codes: 0 success, 1 no path (route) or engine/oracle disagreement
  (check), 2 usage, parse, or validation errors. Results go to the output
  stream, diagnostics to the error stream.
*/

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spath/dijkstra.hpp"
#include "spath/error.hpp"
#include "spath/graph.hpp"
#include "spath/graph_io.hpp"
#include "spath/oracle.hpp"
#include "spath/trace_render.hpp"

namespace spath {

namespace cli_detail {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNoPath = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  std::string graph_path;
  std::string source;
  std::string target;
  std::string format = "text";
  bool trace = false;
};

inline WeightedDigraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_argument, "cannot open graph file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph_file(text.str());
}

inline OutputFormat parse_format(const std::string& f) {
  return f == "json" ? OutputFormat::json : OutputFormat::text;
}

inline nlohmann::ordered_json path_to_json(const WeightedDigraph& g, const Path& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (VertexId v : p) arr.push_back(g.name(v));
  return arr;
}

inline int run_route(const Options& opt, std::ostream& out) {
  WeightedDigraph g = load_graph(opt.graph_path);
  VertexId source = g.vertex(opt.source);
  VertexId target = g.vertex(opt.target);
  OutputFormat format = parse_format(opt.format);

  std::vector<TraceEvent> trace;
  RunResult r = run(g, source, target, RunMode::to_target, opt.trace ? &trace : nullptr);

  if (r.stop_reason != StopReason::target_settled) {
    if (format == OutputFormat::json) {
      nlohmann::ordered_json obj{{"weight", nullptr}, {"path", nullptr}};
      if (opt.trace) obj["trace"] = trace_to_json(g, trace);
      out << obj.dump(2) << '\n';
    } else {
      if (opt.trace) out << render_trace(g, trace, OutputFormat::text);
      out << "no path\n";
    }
    return kExitNoPath;
  }

  double weight = r.labels[target].cost.value();
  Path path = *reconstruct_path(r, target);
  if (format == OutputFormat::json) {
    nlohmann::ordered_json obj{{"weight", weight}, {"path", path_to_json(g, path)}};
    if (opt.trace) obj["trace"] = trace_to_json(g, trace);
    out << obj.dump(2) << '\n';
  } else {
    if (opt.trace) out << render_trace(g, trace, OutputFormat::text);
    out << format_weight_decimal(weight);
    for (VertexId v : path) out << (v == path.front() ? "  " : " ") << g.name(v);
    out << '\n';
  }
  return kExitSuccess;
}

inline int run_sssp(const Options& opt, std::ostream& out) {
  WeightedDigraph g = load_graph(opt.graph_path);
  VertexId source = g.vertex(opt.source);
  RunResult r = run(g, source, std::nullopt, RunMode::exhaustive);

  if (parse_format(opt.format) == OutputFormat::json) {
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const PredecessorLabel& pl = r.labels[v];
      labels.push_back({{"vertex", g.name(v)},
                        {"cost", label_to_json(pl.cost)},
                        {"pred", pl.pred ? nlohmann::ordered_json(g.name(*pl.pred))
                                         : nlohmann::ordered_json(nullptr)}});
    }
    out << nlohmann::ordered_json{{"source", g.name(source)}, {"labels", labels}}.dump(2) << '\n';
  } else {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const PredecessorLabel& pl = r.labels[v];
      out << g.name(v) << ' ' << format_label(pl.cost) << ' '
          << (pl.pred ? g.name(*pl.pred) : "-") << '\n';
    }
  }
  return kExitSuccess;
}

inline int run_check(const Options& opt, std::ostream& out, std::ostream& err) {
  WeightedDigraph g = load_graph(opt.graph_path);
  VertexId source = g.vertex(opt.source);
  VertexId target = g.vertex(opt.target);

  RunResult r = run(g, source, target, RunMode::to_target);
  std::optional<double> engine;
  if (r.stop_reason == StopReason::target_settled) engine = r.labels[target].cost.value();

  if (g.vertex_count() > kDefaultOracleBound) {
    err << "oracle skipped: graph has " << g.vertex_count() << " vertices, bound is "
        << kDefaultOracleBound << '\n';
    out << (engine ? "engine weight=" + format_weight(*engine) : std::string("engine no-path"))
        << '\n';
    return kExitSuccess;
  }

  OracleAnswer oracle = enumerate_min(g, source, target);
  bool agree = false;
  if (!engine && !oracle.min_weight) {
    agree = true;
  } else if (engine && oracle.min_weight && *engine == *oracle.min_weight) {
    // Both sides must also stand behind their own witnesses.
    Path enginePath = *reconstruct_path(r, target);
    agree = path_weight(g, enginePath) == *engine &&
            path_weight(g, *oracle.witness) == *oracle.min_weight;
  }

  if (!agree) {
    err << "mismatch: engine="
        << (engine ? format_weight(*engine) : std::string("no-path")) << " oracle="
        << (oracle.min_weight ? format_weight(*oracle.min_weight) : std::string("no-path"))
        << '\n';
    return kExitNoPath;
  }
  out << (engine ? "ok weight=" + format_weight(*engine) : std::string("ok no-path")) << '\n';
  return kExitSuccess;
}

}  // namespace cli_detail

// Entry point behind main(); args exclude the program name.
inline int cli_main(std::vector<std::string> args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  using cli_detail::Options;

  CLI::App app{"shortest paths over weighted digraphs"};
  app.name("spath");
  app.require_subcommand(1);

  Options opt;
  CLI::App* route = app.add_subcommand("route", "minimal-weight path from source to target");
  route->add_option("--graph", opt.graph_path, "graph file")->required();
  route->add_option("--source", opt.source, "source vertex name")->required();
  route->add_option("--target", opt.target, "target vertex name")->required();
  route->add_flag("--trace", opt.trace, "print one block per settling iteration");
  route->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* sssp = app.add_subcommand("sssp", "labels of every vertex reachable from source");
  sssp->add_option("--graph", opt.graph_path, "graph file")->required();
  sssp->add_option("--source", opt.source, "source vertex name")->required();
  sssp->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* check = app.add_subcommand("check", "compare engine against the enumeration oracle");
  check->add_option("--graph", opt.graph_path, "graph file")->required();
  check->add_option("--source", opt.source, "source vertex name")->required();
  check->add_option("--target", opt.target, "target vertex name")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);  // prints the right help text, exits 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return cli_detail::kExitUsage;
  }

  try {
    if (route->parsed()) return cli_detail::run_route(opt, out);
    if (sssp->parsed()) return cli_detail::run_sssp(opt, out);
    return cli_detail::run_check(opt, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return cli_detail::kExitUsage;
  }
}

}  // namespace spath
