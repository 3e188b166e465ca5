// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dynwalk/error.hpp"
#include "dynwalk/fixtures.hpp"
#include "dynwalk/generators.hpp"
#include "dynwalk/lifting.hpp"
#include "dynwalk/oracle.hpp"
#include "dynwalk/pc.hpp"
#include "dynwalk/structure.hpp"
#include "dynwalk/theorems.hpp"
#include "support/instances.hpp"
#include "support/reference.hpp"

using namespace dynwalk;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << what;
    if (!ok) pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

OracleAnswer ask(const HColoredMultigraph& g, OracleTarget target,
                 std::optional<VertexIndex> through = std::nullopt, std::size_t min_len = 0) {
  OracleQuery q;
  q.target = target;
  q.through = through;
  q.min_len = min_len;
  q.bounds.max_bundle_width = 8;
  return oracle_solve(g, q);
}

struct GoalRun {
  Goal goal;
  std::size_t d;
  std::string label;
};

struct Instance {
  HColoredMultigraph graph;
  ConstructionResult result;
};

const std::vector<GoalRun>& goal_runs() {
  static const std::vector<GoalRun> runs{
      {Goal::LongCycle, 2, "cycle d=2"},      {Goal::LongCycle, 3, "cycle d=3"},
      {Goal::PathOrCycle, 2, "path-or-cycle"}, {Goal::SpanningTrail, 0, "euler"},
      {Goal::OreDynamic, 0, "ham-dyn"},        {Goal::OreH, 0, "ham-h"},
      {Goal::DiracDynamic, 0, "dirac-dyn"},    {Goal::DiracH, 0, "dirac-h"},
  };
  return runs;
}

Outcome sample_regression() {
  Outcome o;
  const auto start = Clock::now();
  const auto g = fixtures::sample();
  o.require(is_dynamic_edge_set(g, g.vertex("v1"), g.vertex("v4")), "E_v1v4 not dynamic; ");
  o.require(!is_dynamic_edge_set(g, g.vertex("v1"), g.vertex("v2")), "E_v1v2 dynamic; ");
  const auto p = verify_walk(g, fixtures::sample_cycle());
  o.require(p.is_dynamic_h_walk && p.is_cycle && p.length == 4 && p.changes == 2,
            "P is not a dynamic H-cycle of length 4 with 2 changes; ");
  const auto t = verify_walk(g, fixtures::sample_trail());
  o.require(t.is_dynamic_h_walk && t.is_trail && t.changes == 1,
            "T is not a dynamic H-trail with 1 change; ");
  for (const char* v : {"v5", "v6", "v7"}) {
    o.require(!ask(g, OracleTarget::HCycleThrough, g.vertex(v), 3).exists,
              std::string("H-cycle through ") + v + "; ");
  }
  const double t_s = seconds_since(start);
  o.require(t_s < 1.0, "took " + std::to_string(t_s) + " s; ");
  if (o.pass) o.detail << "exact match in " << t_s << " s";
  return o;
}

Outcome part_distinct_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  inst::Shape shape;
  shape.max_n = 8;
  shape.max_width = 4;
  std::size_t instances = 0, pairs = 0, mismatches = 0;
  while (instances < 250) {
    const auto g = inst::random_graph(rng, shape);
    if (!hypothesis_report(g).all_multipartite) continue;
    ++instances;
    for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
      for (VertexIndex v = u + 1; v < g.vertex_count(); ++v) {
        ++pairs;
        if (has_part_distinct_pair(g, u, v) != is_dynamic_edge_set(g, u, v)) ++mismatches;
      }
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches; ");
  o.detail << instances << " instances, " << pairs << " pairs, " << mismatches << " mismatches";
  return o;
}

// Criterion 3 runs every construction and keeps the instances for criterion 6.
Outcome construction_guarantees(std::vector<Instance>& kept) {
  Outcome o;
  const auto start = Clock::now();
  std::ostringstream counts;
  for (const auto& run : goal_runs()) {
    std::size_t done = 0;
    for (std::uint64_t seed = 1; done < 120 && seed < 5000; ++seed) {
      const std::size_t n = 3 + seed % 8;
      HColoredMultigraph g;
      try {
        g = gen_random(n, seed, run.goal, run.d == 0 ? 2 : run.d);
      } catch (const Error&) {
        continue;
      }
      ++done;
      try {
        const auto r = construct(g, run.goal, run.d);
        const auto cls = verify_walk(g, r.walk);
        const bool dynamic_kind =
            r.kind == ResultKind::DynamicHCycle || r.kind == ResultKind::SpanningClosedTrail;
        bool ok = cls.is_dynamic_h_walk && cls.length >= r.guaranteed_length &&
                  (dynamic_kind ? cls.changes <= 1 : cls.changes == 0) && !check_result(g, r);
        switch (r.kind) {
          case ResultKind::DynamicHCycle:
          case ResultKind::HCycle: ok = ok && cls.is_cycle; break;
          case ResultKind::HPath: ok = ok && cls.is_path; break;
          case ResultKind::SpanningClosedTrail:
            ok = ok && cls.is_trail && cls.closed && cls.distinct_vertices == g.vertex_count();
            break;
        }
        const auto c = ref::check(g, r.walk);
        ok = ok && c.valid && c.changes == cls.changes;
        o.require(ok, run.label + " seed " + std::to_string(seed) + " broke its promise; ");
        if (n <= 7) kept.push_back({g, r});
      } catch (const Error& e) {
        o.require(false, run.label + " seed " + std::to_string(seed) + ": " + e.what() + "; ");
      }
    }
    o.require(done >= 100, run.label + " only " + std::to_string(done) + " instances; ");
    counts << " " << run.label << ":" << done;
  }
  const double t_s = seconds_since(start);
  o.require(t_s < 60.0, "took " + std::to_string(t_s) + " s; ");
  if (o.pass) o.detail << "instances" << counts.str() << " in " << t_s << " s";
  return o;
}

Outcome tightness() {
  Outcome o;
  for (std::size_t n : {3u, 4u, 5u}) {
    const auto g = gen_glued_complete(n, 2);
    const auto a = ask(g, OracleTarget::LongestDynamicCycle);
    o.require(a.exists && a.value == n, "glued K_" + std::to_string(n) + "^2 longest " +
                                            std::to_string(a.value) + "; ");
  }
  for (std::size_t n : {3u, 4u}) {
    const auto g = gen_glued_complete(n, 3);
    const auto big_n = g.vertex_count();
    o.require(!ask(g, OracleTarget::HamiltonianHCycle).exists,
              "glued K_" + std::to_string(n) + "^3 has a hamiltonian H-cycle; ");
    const auto r = hypothesis_report(g);
    o.require(r.min_nondynamic_pair_sum && *r.min_nondynamic_pair_sum == big_n - 1,
              "glued K_" + std::to_string(n) + "^3 pair sum is not N-1; ");
    o.require(premise_failure(g, r, Goal::OreDynamic) && premise_failure(g, r, Goal::OreH),
              "glued K_" + std::to_string(n) + "^3 passes an Ore premise; ");
  }
  if (o.pass) o.detail << "exact values for K_3^2, K_4^2, K_5^2, K_3^3, K_4^3";
  return o;
}

Outcome pair_colored_k4() {
  Outcome o;
  const auto start = Clock::now();
  const auto ecm = fixtures::pc_k4();
  try {
    const auto result = pc_hamiltonian(ecm);
    const auto& h = result.adapter;
    const auto cls = verify_walk(h, result.construction.walk);
    o.require(cls.is_cycle && cls.is_h_walk && cls.length == ecm.vertices.size(),
              "not a hamiltonian H-cycle; ");
    for (VertexIndex v = 0; v < h.vertex_count(); ++v) {
      o.require(2 * ref::dynamic_degree(h, v) >= h.vertex_count() + 1, "dynamic degree too small; ");
    }
    std::vector<std::size_t> colors;
    for (const auto& s : result.construction.walk.steps) {
      for (EdgeIndex e : s.bundle) {
        for (const auto& edge : ecm.edges) {
          if (edge.id == h.edge(e).id) colors.push_back(edge.color);
        }
      }
    }
    for (std::size_t i = 0; i < colors.size(); ++i) {
      o.require(colors[i] != colors[(i + 1) % colors.size()], "consecutive edges share a color; ");
    }
  } catch (const Error& e) {
    o.require(false, std::string(e.what()) + "; ");
  }
  const double t_s = seconds_since(start);
  o.require(t_s < 1.0, "took " + std::to_string(t_s) + " s; ");
  if (o.pass) o.detail << "properly colored hamiltonian cycle in " << t_s << " s";
  return o;
}

Outcome oracle_agreement(const std::vector<Instance>& kept) {
  Outcome o;
  std::size_t disagreements = 0;
  for (const auto& [g, r] : kept) {
    bool ok = false;
    try {
      switch (r.kind) {
        case ResultKind::DynamicHCycle: {
          const auto a = ask(g, OracleTarget::LongestDynamicCycle);
          ok = a.exists && a.value >= r.guaranteed_length;
          break;
        }
        case ResultKind::HCycle: {
          const auto a = ask(g, OracleTarget::LongestHCycle);
          ok = a.exists && a.value >= r.guaranteed_length;
          break;
        }
        case ResultKind::HPath: {
          const auto a = ask(g, OracleTarget::LongestHPath);
          ok = a.exists && a.value >= r.guaranteed_length;
          break;
        }
        case ResultKind::SpanningClosedTrail:
          ok = ask(g, OracleTarget::SpanningClosedTrail).exists;
          break;
      }
    } catch (const Error& e) {
      o.require(false, std::string(e.what()) + "; ");
    }
    if (!ok) ++disagreements;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements; ");
  o.require(!kept.empty(), "no instances with n <= 7; ");
  o.detail << kept.size() << " instances, " << disagreements << " disagreements";
  return o;
}

Outcome lifting_contract() {
  Outcome o;
  std::mt19937_64 rng(777);
  inst::Shape shape;
  shape.max_width = 4;
  std::size_t lifts = 0, failures = 0;
  for (int round = 0; lifts < 600 && round < 10000; ++round) {
    const auto g = inst::random_graph(rng, shape);
    try {
      const auto path = inst::random_dynamic_path(rng, g);
      if (path.size() >= 2) {
        ++lifts;
        const auto w = lift_path(g, path);
        const auto cls = verify_walk(g, w);
        if (!(cls.is_dynamic_h_walk && cls.is_path && cls.changes == 0 && w.vertices() == path)) {
          ++failures;
        }
      }
      const auto cycle = inst::random_dynamic_cycle(rng, g);
      if (cycle.size() >= 2) {
        ++lifts;
        const auto w = lift_cycle(g, cycle);
        const auto cls = verify_walk(g, w);
        auto vs = w.vertices();
        vs.pop_back();
        if (!(cls.is_dynamic_h_walk && cls.is_cycle && cls.changes <= 1 && vs == cycle)) ++failures;
      }
    } catch (const Error&) {
      ++failures;
    }
  }
  o.require(lifts >= 500, "only " + std::to_string(lifts) + " lifts; ");
  o.require(failures == 0, std::to_string(failures) + " failures; ");
  o.detail << lifts << " lifts, " << failures << " failures";
  return o;
}

}  // namespace

int main() {
  std::vector<Instance> kept;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"sample regression", sample_regression},
      {"part-distinct pair equivalence", part_distinct_equivalence},
      {"construction guarantees", [&] { return construction_guarantees(kept); }},
      {"tightness families", tightness},
      {"pair-colored K4", pair_colored_k4},
      {"oracle agreement", [&] { return oracle_agreement(kept); }},
      {"lifting contract", lifting_contract},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "uncaught: " << e.what();
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": "
              << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
