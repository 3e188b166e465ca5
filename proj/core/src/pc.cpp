#include "dynwalk/pc.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "dynwalk/error.hpp"
#include "dynwalk/oracle.hpp"

namespace dynwalk {

Normalized normalize(const EdgeColoredMultigraph& raw) {
  Normalized out;
  out.graph.vertices = raw.vertices;
  out.graph.colors = raw.colors;
  auto edges = raw.edges;
  std::sort(edges.begin(), edges.end(),
            [](const ColoredEdge& a, const ColoredEdge& b) { return natural_less(a.id, b.id); });
  std::set<std::tuple<std::string, std::string, std::size_t>> seen;
  for (auto& e : edges) {
    auto key = std::make_tuple(std::min(e.u, e.v), std::max(e.u, e.v), e.color);
    if (!seen.insert(key).second) {
      out.dropped.push_back(e.id);
    } else {
      out.graph.edges.push_back(std::move(e));
    }
  }
  return out;
}

HColoredMultigraph to_h_colored(const EdgeColoredMultigraph& ecm) {
  std::vector<EdgeRecord> records;
  for (const auto& e : ecm.edges) {
    if (e.color < 1 || e.color > ecm.colors) {
      throw Error(ErrorKind::UnknownColor, "edge '" + e.id + "' has color " +
                                               std::to_string(e.color) + " outside 1.." +
                                               std::to_string(ecm.colors));
    }
    records.push_back({e.id, e.u, e.v, std::to_string(e.color)});
  }
  return HColoredMultigraph::build(ecm.vertices, std::move(records),
                                   PatternGraph::complete(ecm.colors));
}

std::size_t color_degree(const EdgeColoredMultigraph& ecm, std::string_view x, std::size_t i) {
  if (std::find(ecm.vertices.begin(), ecm.vertices.end(), x) == ecm.vertices.end()) {
    throw Error(ErrorKind::UnknownId, "unknown vertex '" + std::string(x) + "'");
  }
  if (i < 1 || i > ecm.colors) {
    throw Error(ErrorKind::UnknownColor, "color " + std::to_string(i) + " outside 1.." +
                                             std::to_string(ecm.colors));
  }
  std::set<std::string> neighbors;
  for (const auto& e : ecm.edges) {
    if (e.color != i) continue;
    if (e.u == x) neighbors.insert(e.v);
    if (e.v == x) neighbors.insert(e.u);
  }
  return neighbors.size();
}

std::optional<std::string> pc_premise_failure(const EdgeColoredMultigraph& g) {
  const std::size_t n = g.vertices.size();
  if (g.colors < 3) return "c = " + std::to_string(g.colors) + " < 3";
  std::map<std::pair<std::string, std::string>, std::size_t> widths;
  for (const auto& e : g.edges) ++widths[{std::min(e.u, e.v), std::max(e.u, e.v)}];
  for (const auto& [pair, width] : widths) {
    if (width > g.colors - 1) {
      return "E_uv for '" + pair.first + "', '" + pair.second + "' has " + std::to_string(width) +
             " edges > c-1 = " + std::to_string(g.colors - 1);
    }
  }
  for (const auto& x : g.vertices) {
    for (std::size_t i = 1; i <= g.colors; ++i) {
      const std::size_t deg = color_degree(g, x, i);
      if (2 * deg < n) {
        return "δ_" + std::to_string(i) + "('" + x + "') = " + std::to_string(deg) + " < n/2";
      }
    }
  }
  return std::nullopt;
}

PcResult pc_hamiltonian(const EdgeColoredMultigraph& ecm) {
  auto normalized = normalize(ecm);
  if (auto failure = pc_premise_failure(normalized.graph)) {
    throw Error(ErrorKind::PreconditionFailed, "pc-ham: " + *failure);
  }
  auto adapter = to_h_colored(normalized.graph);
  const auto report = hypothesis_report(adapter);
  const std::size_t n = adapter.vertex_count();
  for (const auto& vr : report.vertices) {
    if (2 * vr.dynamic_degree < n + 1) {
      throw Error(ErrorKind::InternalProofViolation,
                  "pc-ham: dynamic degree of '" + adapter.vertex_id(vr.vertex) + "' is " +
                      std::to_string(vr.dynamic_degree) + " < (n+1)/2");
    }
  }
  auto construction = dirac_h(adapter);
  return PcResult{std::move(adapter), std::move(construction), std::move(normalized.dropped)};
}

PcCorollaryReport pc_corollary_checks(const EdgeColoredMultigraph& ecm) {
  const auto normalized = normalize(ecm).graph;
  const auto adapter = to_h_colored(normalized);
  PcCorollaryReport out;
  out.report = hypothesis_report(adapter);
  const std::size_t n = adapter.vertex_count();
  // With a complete pattern, k_u counts the colors seen at u.
  out.every_vertex_two_colors = out.report.all_k_at_least_2;
  out.some_vertex_three_colors = out.report.some_k_at_least_3;
  bool dirac = n > 0;
  for (VertexIndex u = 0; u < n; ++u) {
    dirac &= 2 * out.report.dynamic.degree(u) >= n + 1;
    for (VertexIndex v = u + 1; v < n; ++v) {
      const std::size_t sum = out.report.dynamic.degree(u) + out.report.dynamic.degree(v);
      out.min_pair_sum = std::min(out.min_pair_sum.value_or(sum), sum);
    }
  }
  const bool colors_ok = out.every_vertex_two_colors && out.some_vertex_three_colors;
  out.ore_premise = colors_ok && n >= 2 && *out.min_pair_sum >= n + 1;
  out.dirac_premise = colors_ok && dirac;
  out.bundle_premise = !pc_premise_failure(normalized).has_value();
  return out;
}

std::optional<PcResult> pc_corollary_cycle(const EdgeColoredMultigraph& ecm) {
  const auto checks = pc_corollary_checks(ecm);
  if (!checks.ore_premise && !checks.dirac_premise) return std::nullopt;
  auto normalized = normalize(ecm);
  auto adapter = to_h_colored(normalized.graph);
  auto construction =
      checks.ore_premise ? ore_hamiltonian_h_cycle(adapter) : dirac_h(adapter);
  return PcResult{std::move(adapter), std::move(construction), std::move(normalized.dropped)};
}

ConjectureScan scan_bundle_bound(std::size_t n, std::size_t colors, std::size_t samples,
                                 std::uint64_t seed) {
  if (n < 2 || colors < 3) throw Error(ErrorKind::BadParameters, "need n >= 2 and c >= 3");
  std::mt19937_64 rng(seed);
  ConjectureScan scan;
  for (std::size_t attempt = 0; attempt < samples * 20 && scan.checked < samples; ++attempt) {
    EdgeColoredMultigraph g;
    g.colors = colors;
    for (std::size_t i = 0; i < n; ++i) g.vertices.push_back("v" + std::to_string(i + 1));
    bool full_bundle = false;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = 1; c <= colors; ++c) {
          if (std::bernoulli_distribution(0.6)(rng)) {
            g.edges.push_back({"e" + std::to_string(g.edges.size() + 1), g.vertices[a],
                               g.vertices[b], c});
          }
        }
      }
    }
    std::map<std::pair<std::string, std::string>, std::size_t> widths;
    for (const auto& e : g.edges) full_bundle |= ++widths[{e.u, e.v}] == colors;
    if (!full_bundle) continue;
    bool degrees = true;
    for (const auto& x : g.vertices) {
      for (std::size_t i = 1; i <= colors; ++i) degrees &= 2 * color_degree(g, x, i) >= n;
    }
    if (!degrees) continue;
    const auto adapter = to_h_colored(g);
    if (adapter.max_bundle_width() > OracleBounds{}.max_bundle_width) continue;
    ++scan.checked;
    OracleQuery query;
    query.target = OracleTarget::HamiltonianHCycle;
    if (!oracle_solve(adapter, query).exists) {
      scan.counterexample = g;
      break;
    }
  }
  return scan;
}

}  // namespace dynwalk
