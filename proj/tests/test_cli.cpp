#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "dynwalk/fixtures.hpp"
#include "dynwalk/generators.hpp"
#include "dynwalk/pc.hpp"
#include "dynwalk/structure.hpp"
#include "dynwalk_cli/commands.hpp"
#include "dynwalk_cli/io.hpp"

using namespace dynwalk;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(DYNWALK_TEST_FIXTURES) + "/" + name;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("dynwalk-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "-" +
             std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

}  // namespace

TEST(CliCheck, SampleReport) {
  const auto r = run({"check", fixture("sample.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("G_dym edges: v1v4 v2v3 v3v4 v4v7 v5v6"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("applicable: none"), std::string::npos);
}

TEST(CliCheck, SampleJson) {
  const auto r = run({"check", fixture("sample.json"), "--json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["dynamic_edges"].size(), 5u);
  EXPECT_TRUE(doc["applicable"].empty());
  EXPECT_EQ(doc["min_dynamic_degree"], 1);
  EXPECT_TRUE(doc["not_applicable"].contains("euler"));
}

TEST(CliCheck, GluedK4AppliesLongCycle) {
  TempDir dir;
  ASSERT_EQ(run({"gen", "glued-k2", "4", "--out", dir.file("g.json")}).code, 0);
  const auto r = run({"check", dir.file("g.json"), "--json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = json::parse(r.out);
  bool found = false;
  for (const auto& a : doc["applicable"]) {
    if (a["goal"] == "cycle") {
      found = true;
      EXPECT_EQ(a["d"], 3);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(doc["vertex_count"], 7);
}

TEST(CliCheck, MalformedJsonIsUsageError) {
  const auto r = run({"check", fixture("malformed.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("malformed.json:4"), std::string::npos) << r.err;
}

TEST(CliCheck, FieldErrorsNameThePath) {
  TempDir dir;
  cli::write_file(dir.file("bad.json"),
                  R"({"pattern": {"colors": ["1"]}, "graph": {"vertices": ["a"], "edges": [{"id": "e", "u": "a", "v": 3, "color": "1"}]}})");
  const auto r = run({"check", dir.file("bad.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("$.graph.edges[0].v"), std::string::npos) << r.err;
}

TEST(CliCheck, MissingFileAndUnknownCommand) {
  EXPECT_EQ(run({"check", "/nonexistent/graph.json"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliVerify, SampleCycle) {
  const auto r = run({"verify", fixture("sample.json"), fixture("sample_cycle.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dynamic H-cycle, length 4, changes 2"), std::string::npos) << r.out;
}

TEST(CliVerify, ForbiddenTransition) {
  const auto r = run({"verify", fixture("sample.json"), fixture("sample_bad_walk.json"), "--json"});
  EXPECT_EQ(r.code, 1);
  const auto doc = json::parse(r.out);
  EXPECT_FALSE(doc["valid"]);
  EXPECT_EQ(doc["violation"]["step"], 0);
}

TEST(CliVerify, EmptyWalk) {
  EXPECT_EQ(run({"verify", fixture("sample.json"), fixture("empty_walk.json")}).code, 2);
}

TEST(CliFind, DoubledK4HamiltonianDynamic) {
  TempDir dir;
  const auto r = run({"find", fixture("doubled_k4.json"), "--goal", "ham-dyn", "--out",
                      dir.file("w.json"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["length"], 4);
  EXPECT_LE(doc["changes"].get<int>(), 1);
  EXPECT_EQ(run({"verify", fixture("doubled_k4.json"), dir.file("w.json")}).code, 0);
}

TEST(CliFind, SampleEulerFails) {
  const auto r = run({"find", fixture("sample.json"), "--goal", "euler"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("PreconditionFailed"), std::string::npos);
}

TEST(CliFind, PairColoredK4) {
  TempDir dir;
  const auto r = run({"find", fixture("pc_k4.json"), "--goal", "pc-ham", "--out", dir.file("w.json"),
                      "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_TRUE(doc["properly_colored"]);
  EXPECT_EQ(doc["kind"], "H-cycle");
  EXPECT_EQ(doc["length"], 4);
  EXPECT_EQ(run({"verify", fixture("pc_k4.json"), dir.file("w.json")}).code, 0);
}

TEST(CliFind, UnknownGoalIsUsage) {
  EXPECT_EQ(run({"find", fixture("sample.json"), "--goal", "nope"}).code, 2);
  EXPECT_EQ(run({"find", fixture("sample.json")}).code, 2);
}

TEST(CliFind, OutputAlwaysVerifies) {
  TempDir dir;
  const std::vector<std::pair<std::string, std::string>> cases{
      {"cycle", "2"}, {"path-or-cycle", "2"}, {"euler", ""}, {"ham-dyn", ""},
      {"ham-h", ""},  {"dirac-dyn", ""},      {"dirac-h", ""}};
  for (const auto& [goal, d] : cases) {
    for (int seed = 1; seed <= 3; ++seed) {
      const auto g = dir.file(goal + std::to_string(seed) + ".json");
      const auto w = dir.file(goal + std::to_string(seed) + "-walk.json");
      ASSERT_EQ(run({"gen", "random", goal, "7", std::to_string(seed), "--out", g}).code, 0) << goal;
      std::vector<std::string> args{"find", g, "--goal", goal, "--out", w};
      if (!d.empty()) {
        args.push_back("--d");
        args.push_back(d);
      }
      ASSERT_EQ(run(args).code, 0) << goal;
      EXPECT_EQ(run({"verify", g, w}).code, 0) << goal;
    }
  }
}

TEST(CliGen, FamiliesAndErrors) {
  const auto r = run({"gen", "glued-k2", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["graph"]["vertices"].size(), 7u);
  EXPECT_EQ(run({"gen", "glued-k2", "2"}).code, 3);
  EXPECT_EQ(run({"gen", "glued-k2"}).code, 2);
  EXPECT_EQ(run({"gen", "glued-k2", "x"}).code, 2);
  EXPECT_EQ(run({"gen", "random", "cycle", "2", "5"}).code, 3);
  EXPECT_EQ(run({"gen", "random", "bogus", "6", "5"}).code, 2);
  EXPECT_EQ(run({"gen", "unknown"}).code, 2);
  for (const char* family : {"pc-k4", "sample", "doubled-triangle", "bowtie", "no-adjacent-pair"}) {
    EXPECT_EQ(run({"gen", family}).code, 0) << family;
  }
}

TEST(CliGen, RandomProfileRoundTrips) {
  TempDir dir;
  ASSERT_EQ(run({"gen", "random", "euler", "8", "1", "--out", dir.file("r.json")}).code, 0);
  const auto doc = json::parse(run({"check", dir.file("r.json"), "--json"}).out);
  bool euler = false;
  for (const auto& a : doc["applicable"]) euler |= a["goal"] == "euler";
  EXPECT_TRUE(euler);
  EXPECT_TRUE(doc["dynamic_graph_connected"]);
  EXPECT_TRUE(doc["all_dynamic_degrees_even"]);
}

TEST(CliGen, DeterministicOutput) {
  EXPECT_EQ(run({"gen", "random", "ham-h", "7", "3"}).out, run({"gen", "random", "ham-h", "7", "3"}).out);
}

TEST(CliGen, GraphFilesRoundTrip) {
  const auto g = fixtures::sample();
  const auto again = cli::graph_from_json(cli::graph_to_json(g));
  EXPECT_EQ(again.vertex_ids(), g.vertex_ids());
  EXPECT_EQ(again.pattern(), g.pattern());
  ASSERT_EQ(again.records().size(), g.records().size());
  for (std::size_t i = 0; i < g.records().size(); ++i) {
    EXPECT_EQ(again.records()[i].id, g.records()[i].id);
    EXPECT_EQ(again.records()[i].color, g.records()[i].color);
  }
  const auto pc = fixtures::pc_k4();
  const auto h = cli::graph_from_json(cli::graph_to_json(pc));
  const auto back = cli::edge_colored_view(h);
  EXPECT_EQ(back.colors, pc.colors);
  auto by_id = [](std::vector<ColoredEdge> edges) {
    std::sort(edges.begin(), edges.end(),
              [](const ColoredEdge& a, const ColoredEdge& b) { return a.id < b.id; });
    return edges;
  };
  EXPECT_EQ(by_id(back.edges), by_id(pc.edges));
}

TEST(CliOracle, SampleTailHasNoHCycle) {
  for (const char* v : {"v5", "v6", "v7"}) {
    const auto r = run({"oracle", fixture("sample.json"), "--target", "no-h-cycle-through", v,
                        "--min-len", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "true\n") << v;
  }
  const auto r = run({"oracle", fixture("sample.json"), "--target", "h-cycle-through", "--vertex",
                      "v5", "--min-len", "3", "--json"});
  EXPECT_FALSE(json::parse(r.out)["answer"]);
}

TEST(CliOracle, GluedK4LongestDynamicCycle) {
  TempDir dir;
  ASSERT_EQ(run({"gen", "glued-k2", "4", "--out", dir.file("g.json")}).code, 0);
  const auto r = run({"oracle", dir.file("g.json"), "--target", "longest-dyn-cycle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 2), "4\n");
}

TEST(CliOracle, BoundsAndOverride) {
  TempDir dir;
  ASSERT_EQ(run({"gen", "complete", "12", "2", "2", "--out", dir.file("k12.json")}).code, 0);
  EXPECT_EQ(run({"oracle", dir.file("k12.json"), "--target", "longest-dyn-cycle"}).code, 3);
  ASSERT_EQ(run({"gen", "complete", "11", "1", "1", "--out", dir.file("k11.json")}).code, 0);
  ::setenv("DYNWALK_ORACLE_MAX_N", "11", 1);
  const auto r = run({"oracle", dir.file("k11.json"), "--target", "ham-h-cycle"});
  ::unsetenv("DYNWALK_ORACLE_MAX_N");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "false\n");
}

TEST(CliOracle, UsageErrors) {
  EXPECT_EQ(run({"oracle", fixture("sample.json"), "--target", "h-cycle-through"}).code, 2);
  EXPECT_EQ(run({"oracle", fixture("sample.json"), "--target", "h-cycle-through", "v99"}).code, 2);
  EXPECT_EQ(run({"oracle", fixture("sample.json"), "--target", "bogus"}).code, 2);
}

TEST(CliDot, ListsEveryEdge) {
  const auto r = run({"dot", fixture("sample.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph G {", 0), 0u);
  EXPECT_NE(r.out.find("label=\"e16:R\""), std::string::npos);
}

TEST(CliPcScan, ReportsCount) {
  const auto r = run({"pc-scan", "4", "3", "3", "1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out).contains("checked"));
  EXPECT_EQ(run({"pc-scan", "4"}).code, 2);
}
