#include "dynwalk/structure.hpp"

#include <algorithm>
#include <queue>

#include "dynwalk/error.hpp"

namespace dynwalk {

namespace {

void check_vertex(const HColoredMultigraph& graph, VertexIndex u) {
  if (u >= graph.vertex_count()) {
    throw Error(ErrorKind::UnknownId, "vertex index " + std::to_string(u) + " out of range");
  }
}

void check_pair(const HColoredMultigraph& graph, VertexIndex u, VertexIndex v) {
  check_vertex(graph, u);
  check_vertex(graph, v);
  if (u == v) {
    throw Error(ErrorKind::SameVertex, "bundle endpoints coincide at '" + graph.vertex_id(u) + "'");
  }
}

}  // namespace

AuxiliaryGraph auxiliary_graph(const HColoredMultigraph& graph, VertexIndex u) {
  check_vertex(graph, u);
  AuxiliaryGraph aux;
  aux.center = u;
  aux.nodes.assign(graph.incident(u).begin(), graph.incident(u).end());
  std::sort(aux.nodes.begin(), aux.nodes.end());
  const std::size_t m = aux.nodes.size();
  aux.adjacency.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && graph.colors_adjacent(aux.nodes[i], aux.nodes[j])) aux.adjacency[i * m + j] = 1;
    }
  }
  return aux;
}

MultipartiteCertificate MultipartiteCertificate::from_parts(
    std::vector<std::vector<EdgeIndex>> parts) {
  MultipartiteCertificate cert;
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  cert.parts_ = std::move(parts);
  for (std::size_t i = 0; i < cert.parts_.size(); ++i) {
    for (EdgeIndex e : cert.parts_[i]) cert.lookup_.emplace_back(e, i);
  }
  std::sort(cert.lookup_.begin(), cert.lookup_.end());
  return cert;
}

MultipartiteCertificate MultipartiteCertificate::from_witness(std::array<EdgeIndex, 3> witness) {
  MultipartiteCertificate cert;
  cert.witness_ = witness;
  return cert;
}

std::optional<std::size_t> MultipartiteCertificate::part_of(EdgeIndex e) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(e, std::size_t{0}));
  if (it == lookup_.end() || it->first != e) return std::nullopt;
  return it->second;
}

MultipartiteCertificate multipartite_certificate(const AuxiliaryGraph& aux) {
  const std::size_t m = aux.size();
  // Group each node with the first earlier node it is not adjacent to, then
  // check that adjacency means exactly "different group".
  std::vector<std::size_t> group(m);
  std::vector<std::size_t> leaders;
  for (std::size_t i = 0; i < m; ++i) {
    const auto it = std::find_if(leaders.begin(), leaders.end(),
                                 [&](std::size_t l) { return !aux.adjacent(l, i); });
    if (it == leaders.end()) {
      group[i] = leaders.size();
      leaders.push_back(i);
    } else {
      group[i] = static_cast<std::size_t>(it - leaders.begin());
    }
  }
  bool consistent = true;
  for (std::size_t a = 0; a < m && consistent; ++a) {
    for (std::size_t b = a + 1; b < m && consistent; ++b) {
      consistent = aux.adjacent(a, b) == (group[a] != group[b]);
    }
  }
  if (!consistent) {
    // Non-adjacency is not transitive; report the first violating triple.
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t a = 0; a < m; ++a) {
        if (a == b || aux.adjacent(a, b)) continue;
        for (std::size_t c = a + 1; c < m; ++c) {
          if (c == b || aux.adjacent(b, c)) continue;
          if (aux.adjacent(a, c)) {
            return MultipartiteCertificate::from_witness({aux.nodes[a], aux.nodes[b], aux.nodes[c]});
          }
        }
      }
    }
  }
  std::vector<std::vector<EdgeIndex>> parts(leaders.size());
  for (std::size_t i = 0; i < m; ++i) parts[group[i]].push_back(aux.nodes[i]);
  return MultipartiteCertificate::from_parts(std::move(parts));
}

std::optional<std::pair<EdgeIndex, EdgeIndex>> dynamic_witness(const HColoredMultigraph& graph,
                                                               VertexIndex u, VertexIndex v) {
  check_pair(graph, u, v);
  const auto bundle = graph.bundle(u, v);
  const auto& pattern = graph.pattern();
  for (std::size_t i = 0; i < bundle.size(); ++i) {
    for (std::size_t j = i + 1; j < bundle.size(); ++j) {
      const ColorIndex ci = graph.color(bundle[i]);
      const ColorIndex cj = graph.color(bundle[j]);
      // Incomparable neighborhoods are in particular unequal.
      if (pattern.incomparable(ci, cj)) return std::make_pair(bundle[i], bundle[j]);
    }
  }
  return std::nullopt;
}

bool is_dynamic_edge_set(const HColoredMultigraph& graph, VertexIndex u, VertexIndex v) {
  return dynamic_witness(graph, u, v).has_value();
}

std::optional<std::pair<EdgeIndex, EdgeIndex>> part_distinct_pair(const HColoredMultigraph& graph,
                                                                  VertexIndex u, VertexIndex v) {
  check_pair(graph, u, v);
  const auto bundle = graph.bundle(u, v);
  for (std::size_t i = 0; i < bundle.size(); ++i) {
    for (std::size_t j = i + 1; j < bundle.size(); ++j) {
      if (graph.colors_adjacent(bundle[i], bundle[j])) return std::make_pair(bundle[i], bundle[j]);
    }
  }
  return std::nullopt;
}

std::size_t dynamic_degree(const HColoredMultigraph& graph, VertexIndex u) {
  check_vertex(graph, u);
  std::size_t degree = 0;
  for (VertexIndex v : graph.neighbors(u)) degree += is_dynamic_edge_set(graph, u, v) ? 1 : 0;
  return degree;
}

DynamicGraph::DynamicGraph(std::size_t n) : neighbors_(n), matrix_(n * n, 0) {}

void DynamicGraph::add_edge(VertexIndex u, VertexIndex v) {
  if (u == v || adjacent(u, v)) return;
  matrix_[u * size() + v] = 1;
  matrix_[v * size() + u] = 1;
  neighbors_[u].insert(std::upper_bound(neighbors_[u].begin(), neighbors_[u].end(), v), v);
  neighbors_[v].insert(std::upper_bound(neighbors_[v].begin(), neighbors_[v].end(), u), u);
}

std::size_t DynamicGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nb : neighbors_) total += nb.size();
  return total / 2;
}

std::vector<std::pair<VertexIndex, VertexIndex>> DynamicGraph::edges() const {
  std::vector<std::pair<VertexIndex, VertexIndex>> out;
  for (VertexIndex u = 0; u < size(); ++u) {
    for (VertexIndex v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool DynamicGraph::connected() const {
  if (size() == 0) return true;
  std::vector<char> seen(size(), 0);
  std::queue<VertexIndex> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexIndex u = queue.front();
    queue.pop();
    for (VertexIndex v : neighbors_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        queue.push(v);
      }
    }
  }
  return reached == size();
}

DynamicGraph dynamic_graph(const HColoredMultigraph& graph) {
  DynamicGraph dyn(graph.vertex_count());
  for (VertexIndex u = 0; u < graph.vertex_count(); ++u) {
    for (VertexIndex v : graph.neighbors(u)) {
      if (u < v && is_dynamic_edge_set(graph, u, v)) dyn.add_edge(u, v);
    }
  }
  return dyn;
}

bool has_part_distinct_pair(const HColoredMultigraph& graph, VertexIndex u, VertexIndex v) {
  check_pair(graph, u, v);
  const auto cert = multipartite_certificate(auxiliary_graph(graph, u));
  if (!cert.is_multipartite()) {
    throw Error(ErrorKind::NotMultipartite,
                "G_u at '" + graph.vertex_id(u) + "' is not complete multipartite");
  }
  std::optional<std::size_t> first_part;
  for (EdgeIndex e : graph.bundle(u, v)) {
    const auto p = cert.part_of(e);
    if (!first_part) {
      first_part = p;
    } else if (p != first_part) {
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Goals and the hypothesis report

const std::vector<Goal>& all_goals() {
  static const std::vector<Goal> goals{Goal::LongCycle,    Goal::PathOrCycle, Goal::SpanningTrail,
                                       Goal::OreDynamic,   Goal::OreH,        Goal::DiracDynamic,
                                       Goal::DiracH,       Goal::CompleteDynamic};
  return goals;
}

std::string goal_token(Goal goal) {
  switch (goal) {
    case Goal::LongCycle: return "cycle";
    case Goal::PathOrCycle: return "path-or-cycle";
    case Goal::SpanningTrail: return "euler";
    case Goal::OreDynamic: return "ham-dyn";
    case Goal::OreH: return "ham-h";
    case Goal::DiracDynamic: return "dirac-dyn";
    case Goal::DiracH: return "dirac-h";
    case Goal::CompleteDynamic: return "complete-dyn";
  }
  return "?";
}

std::optional<Goal> goal_from_token(std::string_view token) {
  for (Goal g : all_goals()) {
    if (goal_token(g) == token) return g;
  }
  return std::nullopt;
}

bool goal_takes_degree(Goal goal) { return goal == Goal::LongCycle || goal == Goal::PathOrCycle; }

bool HypothesisReport::applies(Goal goal) const {
  return std::any_of(applicable.begin(), applicable.end(),
                     [goal](const Applicable& a) { return a.goal == goal; });
}

HypothesisReport hypothesis_report(const HColoredMultigraph& graph) {
  HypothesisReport report;
  const std::size_t n = graph.vertex_count();
  report.vertex_count = n;
  report.dynamic = dynamic_graph(graph);

  report.all_multipartite = true;
  report.all_k_at_least_2 = n > 0;
  report.all_k_at_least_3 = n > 0;
  report.all_dynamic_degrees_even = true;
  for (VertexIndex u = 0; u < n; ++u) {
    VertexReport vr;
    vr.vertex = u;
    vr.certificate = multipartite_certificate(auxiliary_graph(graph, u));
    vr.k = vr.certificate.part_count();
    vr.dynamic_degree = report.dynamic.degree(u);
    report.all_multipartite &= vr.certificate.is_multipartite();
    report.all_k_at_least_2 &= vr.certificate.is_multipartite() && vr.k >= 2;
    report.all_k_at_least_3 &= vr.certificate.is_multipartite() && vr.k >= 3;
    report.some_k_at_least_3 |= vr.certificate.is_multipartite() && vr.k >= 3;
    report.all_dynamic_degrees_even &= vr.dynamic_degree % 2 == 0;
    report.min_dynamic_degree = std::min(report.min_dynamic_degree.value_or(vr.dynamic_degree),
                                         vr.dynamic_degree);
    report.vertices.push_back(std::move(vr));
  }
  report.dynamic_graph_connected = n > 0 && report.dynamic.connected();

  for (VertexIndex u = 0; u < n; ++u) {
    for (VertexIndex v = u + 1; v < n; ++v) {
      if (report.dynamic.adjacent(u, v)) continue;
      const std::size_t sum = report.dynamic.degree(u) + report.dynamic.degree(v);
      if (!report.min_nondynamic_pair_sum || sum < *report.min_nondynamic_pair_sum) {
        report.min_nondynamic_pair_sum = sum;
        report.min_nondynamic_pair = std::make_pair(u, v);
      }
    }
    for (VertexIndex v : graph.neighbors(u)) {
      if (u < v && report.dynamic.adjacent(u, v) != part_distinct_pair(graph, u, v).has_value()) {
        report.dynamic_matches_adjacent_pairs = false;
      }
    }
  }

  for (Goal goal : all_goals()) {
    const std::size_t d = report.min_dynamic_degree.value_or(0);
    if (!premise_failure(graph, report, goal, d)) {
      report.applicable.push_back({goal, goal_takes_degree(goal) ? std::optional<std::size_t>(d)
                                                                 : std::nullopt});
    }
  }
  if (n > 0 && report.all_k_at_least_2) {
    const std::size_t sum = report.min_nondynamic_pair_sum.value_or(2 * n);
    report.hamiltonian_path_premise = sum + 1 >= n;
    report.hamiltonian_connected_premise = sum >= n + 1;
  }
  return report;
}

std::optional<std::string> premise_failure(const HColoredMultigraph& graph,
                                           const HypothesisReport& report, Goal goal,
                                           std::size_t d) {
  const std::size_t n = report.vertex_count;
  if (n == 0) return "the graph has no vertices";
  auto vname = [&](VertexIndex v) { return "'" + graph.vertex_id(v) + "'"; };

  const std::size_t min_k = goal == Goal::PathOrCycle ? 3 : 2;
  for (const auto& vr : report.vertices) {
    if (!vr.certificate.is_multipartite()) {
      const auto& w = *vr.certificate.witness();
      return "G_u at " + vname(vr.vertex) + " is not complete multipartite (edges " +
             graph.edge(w[0]).id + ", " + graph.edge(w[1]).id + ", " + graph.edge(w[2]).id + ")";
    }
    if (vr.k < min_k) {
      return "G_u at " + vname(vr.vertex) + " has k_u = " + std::to_string(vr.k) + " < " +
             std::to_string(min_k);
    }
  }

  auto degree_bound = [&](std::size_t bound, const std::string& label) -> std::optional<std::string> {
    for (const auto& vr : report.vertices) {
      if (vr.dynamic_degree < bound) {
        return "dynamic degree of " + vname(vr.vertex) + " is " + std::to_string(vr.dynamic_degree) +
               " < " + label;
      }
    }
    return std::nullopt;
  };
  auto sum_bound = [&](std::size_t bound) -> std::optional<std::string> {
    if (report.min_nondynamic_pair_sum && *report.min_nondynamic_pair_sum < bound) {
      const auto [u, v] = *report.min_nondynamic_pair;
      return "pair " + vname(u) + ", " + vname(v) + " is not dynamic and its dynamic degrees sum to " +
             std::to_string(*report.min_nondynamic_pair_sum) + " < " + std::to_string(bound);
    }
    return std::nullopt;
  };
  auto some_three = [&]() -> std::optional<std::string> {
    if (!report.some_k_at_least_3) return "no vertex has k_u >= 3";
    return std::nullopt;
  };

  switch (goal) {
    case Goal::LongCycle:
    case Goal::PathOrCycle:
      if (d < 2) return "d = " + std::to_string(d) + " < 2";
      return degree_bound(d, "d = " + std::to_string(d));
    case Goal::SpanningTrail:
      if (!report.dynamic_graph_connected) {
        std::vector<char> seen(n, 0);
        std::vector<VertexIndex> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
          const VertexIndex u = stack.back();
          stack.pop_back();
          for (VertexIndex w : report.dynamic.neighbors(u)) {
            if (!seen[w]) {
              seen[w] = 1;
              stack.push_back(w);
            }
          }
        }
        for (VertexIndex w = 0; w < n; ++w) {
          if (!seen[w]) return "G_dym is disconnected: " + vname(w) + " is unreachable from " + vname(0);
        }
        return "G_dym is disconnected";
      }
      for (const auto& vr : report.vertices) {
        if (vr.dynamic_degree < 2 || vr.dynamic_degree % 2 != 0) {
          return "dynamic degree of " + vname(vr.vertex) + " is " + std::to_string(vr.dynamic_degree) +
                 ", not even and >= 2";
        }
      }
      return std::nullopt;
    case Goal::OreDynamic:
      return sum_bound(n);
    case Goal::OreH:
      if (auto f = some_three()) return f;
      return sum_bound(n + 1);
    case Goal::DiracDynamic:
      return degree_bound((n + 1) / 2, "n/2");
    case Goal::DiracH:
      if (auto f = some_three()) return f;
      return degree_bound(n / 2 + 1, "(n+1)/2");
    case Goal::CompleteDynamic:
      for (VertexIndex u = 0; u < n; ++u) {
        for (VertexIndex v = u + 1; v < n; ++v) {
          if (!report.dynamic.adjacent(u, v)) {
            return "E_uv for " + vname(u) + ", " + vname(v) + " is not a dynamic edge set";
          }
        }
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace dynwalk
