#include "spath/graph_io.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "spath/cli.hpp"
#include "spath/trace_render.hpp"
#include "test_support.hpp"

using namespace spath;

namespace {

constexpr const char* kG1Loose =
    "# desk graph\n"
    "directed\n"
    "a b 1\n"
    "a c 4\n"
    "b c 2\n"
    "b z 6\n"
    "c z 3\n";

constexpr const char* kG1Canonical =
    "directed\n"
    "a\n"
    "b\n"
    "c\n"
    "z\n"
    "a b 1\n"
    "a c 4\n"
    "b c 2\n"
    "b z 6\n"
    "c z 3\n";

constexpr const char* kSingleEdgeTrace =
    "[1] settle a cost=0\n"
    "  relax z: inf -> 5 (adopted)\n"
    "[2] settle z cost=5\n";

testing::AssertionResult parse_fails(const std::string& text, Errc expected,
                                     std::optional<int> line = std::nullopt) {
  try {
    parse_graph_file(text);
  } catch (const Error& e) {
    if (e.code() != expected)
      return testing::AssertionFailure() << "wrong error code, message: " << e.what();
    if (line && e.line() != line)
      return testing::AssertionFailure() << "wrong line, message: " << e.what();
    return testing::AssertionSuccess();
  }
  return testing::AssertionFailure() << "no Error thrown";
}

TEST(ParseGraphFile, DeskGraphLooseForm) {
  auto g = parse_graph_file(kG1Loose);
  EXPECT_EQ(g, test::g1());
}

TEST(ParseGraphFile, ToleratesCrlfCommentsAndTabs) {
  auto g = parse_graph_file("# header\r\n\r\ndirected\r\na\tz\t2.5\r\n  \t \r\n");
  EXPECT_EQ(g.mode(), GraphMode::directed);
  EXPECT_EQ(g.edge_weight(g.vertex("a"), g.vertex("z")), 2.5);
}

TEST(ParseGraphFile, VertexDeclarationLines) {
  auto g = parse_graph_file("undirected\nlone\n");
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.name(0), "lone");

  // Declarations intern first, so they pin ordinals ahead of edge mentions.
  auto h = parse_graph_file("directed\nz\na z 1\n");
  EXPECT_EQ(h.name(0), "z");
  EXPECT_EQ(h.name(1), "a");
}

TEST(ParseGraphFile, ModeLineErrors) {
  EXPECT_TRUE(parse_fails("", Errc::syntax));
  EXPECT_TRUE(parse_fails("# only comments\n", Errc::syntax));
  EXPECT_TRUE(parse_fails("a b 1\n", Errc::syntax, 1));
  EXPECT_TRUE(parse_fails("directed\nundirected\n", Errc::syntax, 2));
  EXPECT_TRUE(parse_fails("directed\ndirected\n", Errc::syntax, 2));
}

TEST(ParseGraphFile, EdgeLineErrorsCarryLineNumbers) {
  EXPECT_TRUE(parse_fails("directed\na a 1\n", Errc::self_loop, 2));
  EXPECT_TRUE(parse_fails("directed\na b 1\n# note\na b 1\n", Errc::duplicate_edge, 4));
  EXPECT_TRUE(parse_fails("directed\na b -3\n", Errc::bad_weight, 2));
  EXPECT_TRUE(parse_fails("directed\na b 0\n", Errc::bad_weight, 2));
  EXPECT_TRUE(parse_fails("directed\na b inf\n", Errc::bad_weight, 2));
  EXPECT_TRUE(parse_fails("directed\na b heavy\n", Errc::syntax, 2));
  EXPECT_TRUE(parse_fails("directed\na b\n", Errc::syntax, 2));
  EXPECT_TRUE(parse_fails("directed\na b 1 x\n", Errc::syntax, 2));
}

TEST(ParseGraphFile, ErrorMessagesNameTheLine) {
  try {
    parse_graph_file("directed\na a 1\n");
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_EQ(e.line(), std::optional<int>(2));
    EXPECT_TRUE(std::string(e.what()).starts_with("line 2:")) << e.what();
  }
}

TEST(SerializeGraph, CanonicalFormIsFrozen) {
  EXPECT_EQ(serialize_graph(test::g1()), kG1Canonical);
  auto u = build_graph({{"a", "b", 2.5}}, GraphMode::undirected);
  EXPECT_EQ(serialize_graph(u), "undirected\na\nb\na b 2.5\n");
  EXPECT_EQ(serialize_graph(test::edgeless_pair()), "directed\na\nz\n");
}

TEST(SerializeGraph, RoundTripsExactly) {
  for (const auto& entry : test::corpus()) {
    if (entry.seed % 19 != 0) continue;
    const auto& g = entry.graph;
    std::string s = serialize_graph(g);
    auto reparsed = parse_graph_file(s);
    ASSERT_EQ(reparsed, g) << s;
    EXPECT_EQ(serialize_graph(reparsed), s);  // byte-stable fixed point
  }
  EXPECT_EQ(serialize_graph(parse_graph_file(kG1Loose)), kG1Canonical);
}

TEST(FormatWeight, ShortestRoundTrip) {
  EXPECT_EQ(format_weight(5.0), "5");
  EXPECT_EQ(format_weight(6.5), "6.5");
  EXPECT_EQ(format_weight(0.25), "0.25");
  EXPECT_EQ(format_weight(0.1), "0.1");
  EXPECT_EQ(format_weight(1.0 / 3.0), "0.3333333333333333");
}

TEST(FormatWeight, DecimalFormKeepsOneFractionDigit) {
  EXPECT_EQ(format_weight_decimal(6.0), "6.0");
  EXPECT_EQ(format_weight_decimal(100.0), "100.0");
  EXPECT_EQ(format_weight_decimal(6.5), "6.5");
  EXPECT_EQ(format_weight_decimal(0.25), "0.25");
}

TEST(RenderTrace, SingleEdgeTextIsFrozen) {
  auto g = test::single_edge();
  auto [result, trace] = run_traced(g, 0, 1, RunMode::to_target);
  EXPECT_EQ(render_trace(g, trace), kSingleEdgeTrace);
}

TEST(RenderTrace, EmptyTraceRendersEmpty) {
  EXPECT_EQ(render_trace(test::g1(), {}), "");
  EXPECT_EQ(render_trace(test::g1(), {}, OutputFormat::json), "[]");
}

TEST(RenderTrace, KeptRelaxationAndInfLabels) {
  EXPECT_EQ(format_label(Label::unreachable()), "inf");
  EXPECT_EQ(format_label(Label::finite(2.5)), "2.5");

  // Two equal routes to z: the second offer ties (2 -> 2) and is kept.
  auto g = build_graph({{"a", "b", 1}, {"a", "c", 1}, {"b", "z", 1}, {"c", "z", 1}},
                       GraphMode::directed);
  auto [result, trace] = run_traced(g, g.vertex("a"), g.vertex("z"), RunMode::exhaustive);
  std::string text = render_trace(g, trace);
  EXPECT_NE(text.find("(kept)"), std::string::npos);
}

TEST(RenderTrace, JsonMatchesTextContent) {
  auto g = test::single_edge();
  auto [result, trace] = run_traced(g, 0, 1, RunMode::to_target);
  auto arr = trace_to_json(g, trace);
  ASSERT_EQ(arr.size(), 2u);
  EXPECT_EQ(arr[0]["iteration"], 1);
  EXPECT_EQ(arr[0]["entering"], "a");
  EXPECT_EQ(arr[0]["entering_cost"], 0.0);
  ASSERT_EQ(arr[0]["relaxations"].size(), 1u);
  EXPECT_EQ(arr[0]["relaxations"][0]["neighbor"], "z");
  EXPECT_TRUE(arr[0]["relaxations"][0]["old"].is_null());
  EXPECT_EQ(arr[0]["relaxations"][0]["new"], 5.0);
  EXPECT_EQ(arr[0]["relaxations"][0]["adopted"], true);
  EXPECT_EQ(arr[1]["entering"], "z");
  EXPECT_EQ(arr[1]["entering_cost"], 5.0);
  EXPECT_TRUE(arr[1]["relaxations"].empty());
  EXPECT_EQ(render_trace(g, trace, OutputFormat::json), arr.dump(2));
}

struct CliCall {
  int exit_code;
  std::string out;
  std::string err;
};

CliCall call_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_main(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

const std::string& g1_path() {
  static const std::string path = test::write_temp_file(kG1Loose, "g1").string();
  return path;
}

const std::string& single_path() {
  static const std::string path =
      test::write_temp_file("directed\na z 5\n", "single").string();
  return path;
}

TEST(CliInProcess, RouteHeadline) {
  auto r = call_cli({"route", "--graph", g1_path(), "--source", "a", "--target", "z"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "6.0  a b c z\n");
  EXPECT_EQ(r.err, "");
}

TEST(CliInProcess, RouteTracePrependsIterations) {
  auto r = call_cli({"route", "--graph", single_path(), "--source", "a", "--target", "z",
                     "--trace"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, std::string(kSingleEdgeTrace) + "5.0  a z\n");
}

TEST(CliInProcess, RouteNoPathExitsOne) {
  auto r = call_cli({"route", "--graph", single_path(), "--source", "z", "--target", "a"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.out, "no path\n");

  auto edgeless = test::write_temp_file("directed\na\nz\n", "edgeless").string();
  auto e = call_cli({"route", "--graph", edgeless, "--source", "a", "--target", "z"});
  EXPECT_EQ(e.exit_code, 1);
  EXPECT_EQ(e.out, "no path\n");
}

TEST(CliInProcess, RouteJson) {
  auto r = call_cli({"route", "--graph", g1_path(), "--source", "a", "--target", "z",
                     "--format", "json"});
  EXPECT_EQ(r.exit_code, 0);
  auto obj = nlohmann::json::parse(r.out);
  EXPECT_EQ(obj["weight"], 6.0);
  EXPECT_EQ(obj["path"], nlohmann::json({"a", "b", "c", "z"}));
  EXPECT_FALSE(obj.contains("trace"));

  auto traced = call_cli({"route", "--graph", g1_path(), "--source", "a", "--target", "z",
                          "--format", "json", "--trace"});
  auto tobj = nlohmann::json::parse(traced.out);
  EXPECT_EQ(tobj["trace"].size(), 4u);

  auto nopath = call_cli({"route", "--graph", single_path(), "--source", "z", "--target", "a",
                          "--format", "json"});
  EXPECT_EQ(nopath.exit_code, 1);
  auto nobj = nlohmann::json::parse(nopath.out);
  EXPECT_TRUE(nobj["weight"].is_null());
  EXPECT_TRUE(nobj["path"].is_null());
}

TEST(CliInProcess, SsspTextTable) {
  auto r = call_cli({"sssp", "--graph", g1_path(), "--source", "a"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "a 0 -\nb 1 a\nc 3 b\nz 6 c\n");

  auto unreachable = call_cli({"sssp", "--graph", single_path(), "--source", "z"});
  EXPECT_EQ(unreachable.exit_code, 0);
  EXPECT_EQ(unreachable.out, "a inf -\nz 0 -\n");
}

TEST(CliInProcess, SsspJson) {
  auto r = call_cli({"sssp", "--graph", g1_path(), "--source", "a", "--format", "json"});
  EXPECT_EQ(r.exit_code, 0);
  auto obj = nlohmann::json::parse(r.out);
  EXPECT_EQ(obj["source"], "a");
  ASSERT_EQ(obj["labels"].size(), 4u);
  EXPECT_EQ(obj["labels"][3]["vertex"], "z");
  EXPECT_EQ(obj["labels"][3]["cost"], 6.0);
  EXPECT_EQ(obj["labels"][3]["pred"], "c");
  EXPECT_TRUE(obj["labels"][0]["pred"].is_null());
}

TEST(CliInProcess, CheckAgreesOnExamples) {
  auto r = call_cli({"check", "--graph", g1_path(), "--source", "a", "--target", "z"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "ok weight=6\n");

  auto nopath = call_cli({"check", "--graph", single_path(), "--source", "z", "--target", "a"});
  EXPECT_EQ(nopath.exit_code, 0);
  EXPECT_EQ(nopath.out, "ok no-path\n");
}

TEST(CliInProcess, UsageErrorsExitTwo) {
  EXPECT_EQ(call_cli({}).exit_code, 2);
  EXPECT_EQ(call_cli({"fly", "--graph", g1_path()}).exit_code, 2);
  EXPECT_EQ(call_cli({"route", "--graph", g1_path(), "--source", "a"}).exit_code, 2);
  EXPECT_EQ(call_cli({"sssp", "--graph", g1_path(), "--source", "a", "--trace"}).exit_code, 2);
  EXPECT_EQ(call_cli({"route", "--graph", g1_path(), "--source", "a", "--target", "z",
                      "--format", "yaml"}).exit_code, 2);
}

TEST(CliInProcess, DomainErrorsExitTwo) {
  auto unknown = call_cli({"route", "--graph", g1_path(), "--source", "q", "--target", "z"});
  EXPECT_EQ(unknown.exit_code, 2);
  EXPECT_NE(unknown.err.find("error:"), std::string::npos);
  EXPECT_EQ(unknown.out, "");

  auto missing = call_cli({"route", "--graph", "/nonexistent/x.graph", "--source", "a",
                           "--target", "z"});
  EXPECT_EQ(missing.exit_code, 2);

  auto bad = test::write_temp_file("nonsense\n", "bad");
  auto syntax = call_cli({"route", "--graph", bad.string(), "--source", "a", "--target", "z"});
  EXPECT_EQ(syntax.exit_code, 2);
  EXPECT_NE(syntax.err.find("line 1"), std::string::npos);

  auto negative = test::write_temp_file("directed\na z -3\n", "negative");
  auto weight = call_cli({"route", "--graph", negative.string(), "--source", "a", "--target", "z"});
  EXPECT_EQ(weight.exit_code, 2);
  EXPECT_NE(weight.err.find("line 2"), std::string::npos) << weight.err;
}

TEST(CliInProcess, HelpExitsZero) {
  auto r = call_cli({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("route"), std::string::npos);
  EXPECT_NE(r.out.find("sssp"), std::string::npos);
  EXPECT_NE(r.out.find("check"), std::string::npos);
}

}  // namespace
