#include <functional>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "dynwalk/error.hpp"
#include "dynwalk/fixtures.hpp"
#include "dynwalk/generators.hpp"
#include "dynwalk/theorems.hpp"
#include "support/instances.hpp"
#include "support/reference.hpp"

using namespace dynwalk;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorKind::BadParameters;
}

/// Checks the promise with the reference checker rather than check_result.
void expect_promise(const HColoredMultigraph& g, const ConstructionResult& r) {
  const auto c = ref::check(g, r.walk);
  ASSERT_TRUE(c.valid) << format_walk(g, r.walk);
  EXPECT_GE(c.length, r.guaranteed_length);
  EXPECT_LE(c.changes, r.max_changes);
  switch (r.kind) {
    case ResultKind::DynamicHCycle:
      EXPECT_TRUE(c.cycle);
      EXPECT_LE(c.changes, 1u);
      break;
    case ResultKind::HCycle:
      EXPECT_TRUE(c.cycle);
      EXPECT_EQ(c.changes, 0u);
      break;
    case ResultKind::HPath:
      EXPECT_TRUE(c.path);
      EXPECT_EQ(c.changes, 0u);
      break;
    case ResultKind::SpanningClosedTrail:
      EXPECT_TRUE(c.trail);
      EXPECT_TRUE(r.walk.closed);
      EXPECT_EQ(c.distinct, g.vertex_count());
      EXPECT_LE(c.changes, 1u);
      break;
  }
}

}  // namespace

TEST(LongCycle, DoubledTriangle) {
  const auto g = fixtures::doubled_triangle();
  const auto r = long_dynamic_cycle(g, 2);
  expect_promise(g, r);
  EXPECT_EQ(r.walk.length(), 3u);
}

TEST(LongCycle, GluedK4IsTight) {
  const auto g = gen_glued_complete(4, 2);
  const auto r = long_dynamic_cycle(g, 3);
  expect_promise(g, r);
  EXPECT_GE(r.walk.length(), 4u);
  EXPECT_EQ(ref::longest_cycle(g, true), 4u);
}

TEST(LongCycle, DoubledK5IsHamiltonian) {
  const auto g = gen_complete_multigraph(5, 2, 3);
  const auto r = long_dynamic_cycle(g, 4);
  expect_promise(g, r);
  EXPECT_EQ(r.walk.length(), 5u);
}

TEST(LongCycle, RejectsSmallDegreeBound) {
  const auto g = fixtures::doubled_triangle();
  EXPECT_EQ(kind_of([&] { long_dynamic_cycle(g, 1); }), ErrorKind::PreconditionFailed);
  EXPECT_EQ(kind_of([&] { long_dynamic_cycle(g, 3); }), ErrorKind::PreconditionFailed);
}

TEST(PathOrCycle, TripledK4GivesHamiltonianCycle) {
  const auto g = gen_complete_multigraph(4, 3, 3);
  const auto r = path_or_cycle(g, 3);
  expect_promise(g, r);
  EXPECT_EQ(r.kind, ResultKind::HCycle);
  EXPECT_EQ(r.walk.length(), 4u);
  EXPECT_EQ(ref::longest_cycle(g, false), 4u);
}

TEST(PathOrCycle, TripledK6WithSmallBound) {
  const auto g = gen_complete_multigraph(6, 3, 3);
  const auto r = path_or_cycle(g, 2);
  expect_promise(g, r);
  if (r.kind == ResultKind::HPath) {
    EXPECT_GE(r.walk.length(), 4u);
  } else {
    EXPECT_GE(r.walk.length(), 3u);
  }
}

TEST(PathOrCycle, NeedsThreeParts) {
  const auto g = fixtures::doubled_triangle();
  EXPECT_EQ(kind_of([&] { path_or_cycle(g, 2); }), ErrorKind::PreconditionFailed);
}

TEST(SpanningTrail, Bowtie) {
  const auto g = fixtures::bowtie();
  const auto r = spanning_closed_trail(g);
  expect_promise(g, r);
  EXPECT_EQ(r.walk.length(), 6u);
  EXPECT_EQ(ref::check(g, r.walk).distinct, 5u);
}

TEST(SpanningTrail, DoubledTriangle) {
  const auto g = fixtures::doubled_triangle();
  const auto r = spanning_closed_trail(g);
  expect_promise(g, r);
  EXPECT_EQ(r.walk.length(), 3u);
}

TEST(SpanningTrail, DisconnectedDynamicGraphFails) {
  const auto g = fixtures::sample();
  EXPECT_EQ(kind_of([&] { spanning_closed_trail(g); }), ErrorKind::PreconditionFailed);
}

TEST(OreDynamic, DoubledK4) {
  const auto g = gen_complete_multigraph(4, 2, 2);
  const auto r = ore_hamiltonian_dynamic_cycle(g);
  expect_promise(g, r);
  EXPECT_EQ(r.walk.length(), 4u);
}

TEST(OreDynamic, RandomOddCycleWithChords) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto g = gen_random(5, seed, Goal::OreDynamic);
    const auto r = ore_hamiltonian_dynamic_cycle(g);
    expect_promise(g, r);
    EXPECT_EQ(r.walk.length(), 5u);
  }
}

TEST(OreDynamic, GluedK4TripledFailsAndHasNoHamiltonianCycle) {
  const auto g = gen_glued_complete(4, 3);
  EXPECT_EQ(kind_of([&] { ore_hamiltonian_dynamic_cycle(g); }), ErrorKind::PreconditionFailed);
  EXPECT_LT(ref::longest_cycle(g, true), g.vertex_count());
}

TEST(OreH, TripledK4AndK5) {
  for (std::size_t n : {4u, 5u}) {
    const auto g = gen_complete_multigraph(n, 3, 3);
    const auto r = ore_hamiltonian_h_cycle(g);
    expect_promise(g, r);
    EXPECT_EQ(r.walk.length(), n);
    EXPECT_EQ(r.walk.changes(), 0u);
  }
}

TEST(OreH, DoubledK4LacksThreeParts) {
  const auto g = gen_complete_multigraph(4, 2, 2);
  EXPECT_EQ(kind_of([&] { ore_hamiltonian_h_cycle(g); }), ErrorKind::PreconditionFailed);
}

TEST(Dirac, DoubledK6AndTripledK5) {
  const auto k6 = gen_complete_multigraph(6, 2, 2);
  const auto a = dirac_dynamic(k6);
  expect_promise(k6, a);
  EXPECT_EQ(a.walk.length(), 6u);
  const auto k5 = gen_complete_multigraph(5, 3, 3);
  const auto b = dirac_h(k5);
  expect_promise(k5, b);
  EXPECT_EQ(b.walk.length(), 5u);
}

TEST(Dirac, DoubledPathFails) {
  const auto g = fixtures::doubled_path(4);
  EXPECT_EQ(kind_of([&] { dirac_dynamic(g); }), ErrorKind::PreconditionFailed);
  EXPECT_EQ(kind_of([&] { dirac_h(g); }), ErrorKind::PreconditionFailed);
}

TEST(Construct, CompleteDynamicDispatch) {
  const auto g = gen_complete_multigraph(5, 2, 2);
  const auto r = construct(g, Goal::CompleteDynamic);
  expect_promise(g, r);
  EXPECT_EQ(r.walk.length(), 5u);
  EXPECT_EQ(kind_of([&] { construct(fixtures::sample(), Goal::CompleteDynamic); }),
            ErrorKind::PreconditionFailed);
}

TEST(Helpers, GrowDynamicPathIsMaximal) {
  const auto g = gen_glued_complete(4, 2);
  const auto dyn = dynamic_graph(g);
  const auto path = grow_dynamic_path(dyn, {0});
  std::set<VertexIndex> on(path.begin(), path.end());
  EXPECT_EQ(on.size(), path.size());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) EXPECT_TRUE(dyn.adjacent(path[i], path[i + 1]));
  for (VertexIndex end : {path.front(), path.back()}) {
    for (VertexIndex v : dyn.neighbors(end)) EXPECT_TRUE(on.count(v));
  }
}

TEST(Helpers, EulerCircuitUsesEveryEdgeOnce) {
  const auto g = fixtures::bowtie();
  const auto dyn = dynamic_graph(g);
  const auto circuit = euler_circuit(dyn, 0);
  ASSERT_EQ(circuit.size(), dyn.edge_count());
  std::set<std::pair<VertexIndex, VertexIndex>> used;
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    VertexIndex a = circuit[i], b = circuit[(i + 1) % circuit.size()];
    if (a > b) std::swap(a, b);
    EXPECT_TRUE(dyn.adjacent(a, b));
    EXPECT_TRUE(used.insert({a, b}).second);
  }
}

TEST(Helpers, ExchangeFindsHamiltonianCycle) {
  const auto g = gen_complete_multigraph(6, 2, 2);
  const auto dyn = dynamic_graph(g);
  const auto cycle = exchange_hamiltonian_cycle(dyn, {5, 3, 1, 0, 2, 4});
  ASSERT_TRUE(cycle);
  EXPECT_EQ(cycle->size(), 6u);
  EXPECT_EQ(cycle->front(), 0u);
}

TEST(CheckResult, FlagsBrokenPromises) {
  const auto g = fixtures::doubled_triangle();
  auto r = long_dynamic_cycle(g, 2);
  EXPECT_FALSE(check_result(g, r));
  r.guaranteed_length = 4;
  EXPECT_TRUE(check_result(g, r));
  r = long_dynamic_cycle(g, 2);
  r.max_changes = 0;
  EXPECT_TRUE(check_result(g, r));
}

// Every branch of every construction is reached by some seeded instance.
TEST(Strategies, EveryBranchIsExercised) {
  const std::map<Goal, std::set<std::string>> expected{
      {Goal::LongCycle, {"maximal-path"}},
      {Goal::PathOrCycle, {"long-path", "cycle-through-first", "cycle-through-last"}},
      {Goal::SpanningTrail, {"euler-circuit"}},
      {Goal::OreDynamic, {"exchange"}},
      {Goal::OreH,
       {"two-vertex", "three-parts-forward", "three-parts-backward", "reroute-direct",
        "reroute-inner", "reroute-outer"}},
  };
  std::map<Goal, std::set<std::string>> seen;
  for (const auto& [goal, strategies] : expected) {
    for (std::size_t n = 2; n <= 9; ++n) {
      for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        if (seen[goal] == strategies) break;
        for (std::size_t d : {2u, 3u}) {
          if (!goal_takes_degree(goal) && d != 2) continue;
          HColoredMultigraph g;
          try {
            g = gen_random(n, seed, goal, d);
          } catch (const Error&) {
            continue;
          }
          const auto r = construct(g, goal, d);
          expect_promise(g, r);
          seen[goal].insert(r.strategy);
        }
      }
    }
  }
  // A two-vertex H-cycle needs exactly two vertices.
  const auto pair = gen_complete_multigraph(2, 3, 3);
  seen[Goal::OreH].insert(ore_hamiltonian_h_cycle(pair).strategy);
  // Rerouting needs every cycle vertex to see two parts only.
  std::mt19937_64 rng(1);
  for (int round = 0; round < 2000; ++round) {
    const auto g = inst::two_colors_with_third_chords(rng);
    if (premise_failure(g, hypothesis_report(g), Goal::OreH)) continue;
    const auto r = ore_hamiltonian_h_cycle(g);
    expect_promise(g, r);
    seen[Goal::OreH].insert(r.strategy);
  }
  for (const auto& [goal, strategies] : expected) {
    for (const auto& s : strategies) {
      EXPECT_TRUE(seen[goal].count(s)) << goal_token(goal) << " never took " << s;
    }
  }
}
