#include <gtest/gtest.h>

#include "dynwalk/error.hpp"
#include "dynwalk/fixtures.hpp"
#include "dynwalk/pc.hpp"
#include "support/reference.hpp"

using namespace dynwalk;

namespace {

EdgeColoredMultigraph tripled_k5() {
  EdgeColoredMultigraph g;
  g.colors = 3;
  g.vertices = {"a", "b", "c", "d", "e"};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      for (std::size_t c = 1; c <= 3; ++c) {
        g.edges.push_back({g.vertices[i] + g.vertices[j] + std::to_string(c), g.vertices[i],
                           g.vertices[j], c});
      }
    }
  }
  return g;
}

/// No two cyclically consecutive edges share an original color.
bool properly_colored(const EdgeColoredMultigraph& ecm, const HColoredMultigraph& adapter,
                      const DynamicHWalk& w) {
  std::vector<std::size_t> colors;
  for (const auto& s : w.steps) {
    for (EdgeIndex e : s.bundle) {
      const auto& id = adapter.edge(e).id;
      for (const auto& edge : ecm.edges) {
        if (edge.id == id) colors.push_back(edge.color);
      }
    }
  }
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] == colors[(i + 1) % colors.size()]) return false;
  }
  return !colors.empty();
}

}  // namespace

TEST(Normalize, DropsRepeatedColorsOnAPair) {
  EdgeColoredMultigraph g;
  g.colors = 2;
  g.vertices = {"x", "y"};
  g.edges = {{"p", "x", "y", 1}, {"q", "y", "x", 1}};
  const auto n = normalize(g);
  EXPECT_EQ(n.graph.edges.size(), 1u);
  EXPECT_EQ(n.dropped, std::vector<std::string>{"q"});
  EXPECT_EQ(color_degree(n.graph, "x", 1), color_degree(g, "x", 1));
  EXPECT_EQ(color_degree(n.graph, "y", 1), 1u);
}

TEST(Normalize, IdentityOnNormalGraphs) {
  const auto g = fixtures::pc_k4();
  const auto n = normalize(g);
  EXPECT_TRUE(n.dropped.empty());
  EXPECT_EQ(n.graph.edges.size(), g.edges.size());
}

TEST(Normalize, TripleParallelKeepsDistinctColors) {
  EdgeColoredMultigraph g;
  g.colors = 2;
  g.vertices = {"x", "y"};
  g.edges = {{"e1", "x", "y", 1}, {"e2", "x", "y", 1}, {"e3", "x", "y", 2}};
  const auto n = normalize(g);
  ASSERT_EQ(n.graph.edges.size(), 2u);
  EXPECT_EQ(n.graph.edges[0].color, 1u);
  EXPECT_EQ(n.graph.edges[1].color, 2u);
}

TEST(Adapter, TriangleWithThreeColorsIsPcCycle) {
  EdgeColoredMultigraph g;
  g.colors = 3;
  g.vertices = {"a", "b", "c"};
  g.edges = {{"ab", "a", "b", 1}, {"bc", "b", "c", 2}, {"ca", "c", "a", 3}};
  const auto h = to_h_colored(g);
  EXPECT_TRUE(h.pattern().is_complete_loopless());
  WalkDescription w;
  w.closed = true;
  w.steps = {{"a", {"ab"}}, {"b", {"bc"}}, {"c", {"ca"}}};
  const auto cls = verify_walk(h, w);
  EXPECT_TRUE(cls.is_cycle);
  EXPECT_TRUE(cls.is_h_walk);
}

TEST(Adapter, OneColorForbidsEveryTransition) {
  EdgeColoredMultigraph g;
  g.colors = 1;
  g.vertices = {"a", "b", "c"};
  g.edges = {{"ab", "a", "b", 1}, {"bc", "b", "c", 1}};
  const auto h = to_h_colored(g);
  WalkDescription w;
  w.steps = {{"a", {"ab"}}, {"b", {"bc"}}};
  w.end = "c";
  EXPECT_FALSE(verify_walk(h, w).is_dynamic_h_walk);
}

TEST(Adapter, RejectsOutOfRangeColor) {
  EdgeColoredMultigraph g;
  g.colors = 2;
  g.vertices = {"a", "b"};
  g.edges = {{"ab", "a", "b", 3}};
  EXPECT_THROW(to_h_colored(g), Error);
}

TEST(ColorDegree, PairColoredK4) {
  const auto g = fixtures::pc_k4();
  for (const auto& x : g.vertices) {
    for (std::size_t i = 1; i <= 3; ++i) EXPECT_EQ(color_degree(g, x, i), 2u);
  }
  EdgeColoredMultigraph two;
  two.colors = 3;
  two.vertices = {"x", "y"};
  two.edges = {{"p", "x", "y", 1}, {"q", "x", "y", 2}};
  EXPECT_EQ(color_degree(two, "x", 1), 1u);
  EXPECT_EQ(color_degree(two, "x", 2), 1u);
  EXPECT_EQ(color_degree(two, "x", 3), 0u);
}

TEST(PcHamiltonian, PairColoredK4) {
  const auto g = fixtures::pc_k4();
  const auto result = pc_hamiltonian(g);
  const auto c = ref::check(result.adapter, result.construction.walk);
  EXPECT_TRUE(c.valid && c.cycle);
  EXPECT_EQ(c.length, 4u);
  EXPECT_EQ(c.changes, 0u);
  EXPECT_TRUE(properly_colored(g, result.adapter, result.construction.walk));
  for (VertexIndex v = 0; v < result.adapter.vertex_count(); ++v) {
    EXPECT_GE(2 * ref::dynamic_degree(result.adapter, v), 5u);
  }
}

TEST(PcHamiltonian, DegreeOneShortFails) {
  auto g = fixtures::pc_k4();
  // Without ac1, δ_1(a) = 1 = n/2 - 1.
  std::erase_if(g.edges, [](const ColoredEdge& e) { return e.id == "ac1"; });
  try {
    pc_hamiltonian(g);
    FAIL() << "expected PreconditionFailed";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
  }
}

TEST(PcHamiltonian, FullBundleFails) {
  auto g = fixtures::pc_k4();
  g.edges.push_back({"ab1", "a", "b", 1});
  EXPECT_TRUE(pc_premise_failure(normalize(g).graph));
  EXPECT_THROW(pc_hamiltonian(g), Error);
}

TEST(PcHamiltonian, NeedsThreeColors) {
  EdgeColoredMultigraph g;
  g.colors = 2;
  g.vertices = {"a", "b"};
  g.edges = {{"p", "a", "b", 1}};
  EXPECT_TRUE(pc_premise_failure(g));
}

TEST(PcCorollaries, TripledK5BothApply) {
  const auto checks = pc_corollary_checks(tripled_k5());
  EXPECT_TRUE(checks.ore_premise);
  EXPECT_TRUE(checks.dirac_premise);
  const auto cycle = pc_corollary_cycle(tripled_k5());
  ASSERT_TRUE(cycle);
  EXPECT_TRUE(properly_colored(tripled_k5(), cycle->adapter, cycle->construction.walk));
}

TEST(PcCorollaries, TwoColorsNeverApply) {
  EdgeColoredMultigraph g;
  g.colors = 2;
  g.vertices = {"a", "b", "c"};
  for (const auto& [u, v] : std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}, {"c", "a"}}) {
    g.edges.push_back({u + v + "1", u, v, 1});
    g.edges.push_back({u + v + "2", u, v, 2});
  }
  const auto checks = pc_corollary_checks(g);
  EXPECT_FALSE(checks.some_vertex_three_colors);
  EXPECT_FALSE(checks.ore_premise);
  EXPECT_FALSE(checks.dirac_premise);
  EXPECT_FALSE(pc_corollary_cycle(g));
}

TEST(PcCorollaries, PairColoredK4MeetsDegreeCorollary) {
  const auto checks = pc_corollary_checks(fixtures::pc_k4());
  EXPECT_TRUE(checks.dirac_premise);
  EXPECT_TRUE(checks.bundle_premise);
}

TEST(PcScan, SmallScanIsDeterministic) {
  const auto a = scan_bundle_bound(4, 3, 5, 17);
  const auto b = scan_bundle_bound(4, 3, 5, 17);
  EXPECT_EQ(a.checked, b.checked);
  EXPECT_EQ(a.counterexample.has_value(), b.counterexample.has_value());
  EXPECT_THROW(scan_bundle_bound(1, 3, 5, 1), Error);
}
