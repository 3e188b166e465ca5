#include "dynwalk/theorems.hpp"

#include <algorithm>
#include <set>

#include "dynwalk/error.hpp"
#include "dynwalk/lifting.hpp"

namespace dynwalk {

std::string to_string(ResultKind kind) {
  switch (kind) {
    case ResultKind::DynamicHCycle: return "dynamic H-cycle";
    case ResultKind::HCycle: return "H-cycle";
    case ResultKind::HPath: return "H-path";
    case ResultKind::SpanningClosedTrail: return "spanning closed dynamic H-trail";
  }
  return "?";
}

std::optional<std::string> check_result(const HColoredMultigraph& graph,
                                        const ConstructionResult& result) {
  const auto cls = verify_walk(graph, result.walk);
  if (!cls.is_dynamic_h_walk) return "not a dynamic H-walk: " + cls.first_violation->message;
  if (cls.changes > result.max_changes) {
    return std::to_string(cls.changes) + " changes, at most " + std::to_string(result.max_changes) +
           " promised";
  }
  if (cls.length < result.guaranteed_length) {
    return "length " + std::to_string(cls.length) + " < " + std::to_string(result.guaranteed_length);
  }
  switch (result.kind) {
    case ResultKind::DynamicHCycle:
    case ResultKind::HCycle:
      if (!cls.is_cycle) return "walk is not a cycle";
      break;
    case ResultKind::HPath:
      if (!cls.is_path) return "walk is not a path";
      break;
    case ResultKind::SpanningClosedTrail:
      if (!cls.is_trail || !cls.closed) return "walk is not a closed trail";
      if (cls.distinct_vertices != graph.vertex_count()) return "trail misses a vertex";
      break;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void violation(Goal goal, const std::string& message) {
  throw Error(ErrorKind::InternalProofViolation, goal_token(goal) + ": " + message);
}

void require(const HColoredMultigraph& graph, const HypothesisReport& report, Goal goal,
             std::size_t d = 0) {
  if (auto failure = premise_failure(graph, report, goal, d)) {
    throw Error(ErrorKind::PreconditionFailed, goal_token(goal) + ": " + *failure);
  }
}

ConstructionResult finish(const HColoredMultigraph& graph, ConstructionResult result) {
  if (auto failure = check_result(graph, result)) violation(result.goal, *failure);
  return result;
}

/// Closes an open walk ending at `from` back to its start with the first
/// of `a`, `b` that continues the last edge.
void close_with(const HColoredMultigraph& graph, DynamicHWalk& walk, EdgeIndex a, EdgeIndex b,
                Goal goal) {
  const EdgeIndex last = walk.steps.back().bundle.back();
  EdgeIndex chosen = a;
  if (!graph.colors_adjacent(last, a)) {
    if (!graph.colors_adjacent(last, b)) violation(goal, "neither closing edge continues the walk");
    chosen = b;
  }
  walk.steps.push_back({walk.terminal, {chosen}});
  walk.terminal = walk.steps.front().from;
  walk.closed = true;
}

DynamicHWalk start_walk(VertexIndex from, EdgeIndex e, VertexIndex to) {
  DynamicHWalk walk;
  walk.steps.push_back({from, {e}});
  walk.terminal = to;
  return walk;
}

}  // namespace

std::vector<VertexIndex> grow_dynamic_path(const DynamicGraph& dyn, std::deque<VertexIndex> path) {
  std::vector<char> used(dyn.size(), 0);
  for (VertexIndex v : path) used[v] = 1;
  auto fresh_neighbor = [&](VertexIndex end) -> std::optional<VertexIndex> {
    for (VertexIndex w : dyn.neighbors(end)) {
      if (!used[w]) return w;
    }
    return std::nullopt;
  };
  while (!path.empty()) {
    if (auto w = fresh_neighbor(path.back())) {
      used[*w] = 1;
      path.push_back(*w);
    } else if (auto w2 = fresh_neighbor(path.front())) {
      used[*w2] = 1;
      path.push_front(*w2);
    } else {
      break;
    }
  }
  return {path.begin(), path.end()};
}

std::optional<std::vector<VertexIndex>> exchange_hamiltonian_cycle(const DynamicGraph& dyn,
                                                                   std::vector<VertexIndex> order) {
  const std::size_t n = order.size();
  if (n < 2) return std::nullopt;
  if (n == 2) {
    if (!dyn.adjacent(order[0], order[1])) return std::nullopt;
    return order;
  }
  // Each exchange repairs the gap at position 0 without opening a new one,
  // so n rounds suffice.
  for (std::size_t round = 0; round <= n; ++round) {
    std::size_t gap = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!dyn.adjacent(order[i], order[(i + 1) % n])) {
        gap = i;
        break;
      }
    }
    if (gap == n) {
      std::rotate(order.begin(), std::min_element(order.begin(), order.end()), order.end());
      return order;
    }
    std::rotate(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(gap), order.end());
    std::size_t j = 0;
    for (std::size_t cand = 2; cand + 1 < n; ++cand) {
      if (dyn.adjacent(order[0], order[cand]) && dyn.adjacent(order[1], order[cand + 1])) {
        j = cand;
        break;
      }
    }
    if (j == 0) return std::nullopt;
    std::reverse(order.begin() + 1, order.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  }
  return std::nullopt;
}

std::vector<VertexIndex> euler_circuit(const DynamicGraph& dyn, VertexIndex start) {
  const std::size_t n = dyn.size();
  std::vector<char> removed(n * n, 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<VertexIndex> stack{start};
  std::vector<VertexIndex> circuit;
  while (!stack.empty()) {
    const VertexIndex v = stack.back();
    const auto nb = dyn.neighbors(v);
    while (next[v] < nb.size() && removed[v * n + nb[next[v]]]) ++next[v];
    if (next[v] < nb.size()) {
      const VertexIndex w = nb[next[v]];
      removed[v * n + w] = 1;
      removed[w * n + v] = 1;
      stack.push_back(w);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() > 1) circuit.pop_back();
  return circuit;
}

// ---------------------------------------------------------------------------

ConstructionResult long_dynamic_cycle(const HColoredMultigraph& graph, std::size_t d) {
  const auto report = hypothesis_report(graph);
  require(graph, report, Goal::LongCycle, d);
  const auto path = grow_dynamic_path(report.dynamic, {0});
  std::size_t j = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (report.dynamic.adjacent(path[0], path[i])) j = i;
  }
  if (j < d) {
    violation(Goal::LongCycle, "end of a maximal path has its last dynamic neighbor at index " +
                                   std::to_string(j) + " < d");
  }
  ConstructionResult result;
  result.walk = lift_cycle(graph, std::span(path.data(), j + 1));
  result.goal = Goal::LongCycle;
  result.guaranteed_length = d + 1;
  result.max_changes = 1;
  result.kind = ResultKind::DynamicHCycle;
  result.strategy = "maximal-path";
  return finish(graph, std::move(result));
}

namespace {

struct Triple {
  VertexIndex v;  // e and f join x to v
  VertexIndex y;  // g joins x to y
  EdgeIndex e;
  EdgeIndex f;
  EdgeIndex g;
};

/// e, f in E_{xv} with E_{xv} dynamic and g outside E_{xv}, all three in
/// different parts of G_x.
std::optional<Triple> find_triple(const HColoredMultigraph& graph, const Lifter& lifter,
                                  const DynamicGraph& dyn, VertexIndex x) {
  const auto& cert = lifter.certificate(x);
  for (VertexIndex v : dyn.neighbors(x)) {
    const auto bundle = graph.bundle(x, v);
    for (std::size_t a = 0; a < bundle.size(); ++a) {
      for (std::size_t b = a + 1; b < bundle.size(); ++b) {
        const auto pe = cert.part_of(bundle[a]);
        const auto pf = cert.part_of(bundle[b]);
        if (pe == pf) continue;
        for (VertexIndex y : graph.neighbors(x)) {
          if (y == v) continue;
          for (EdgeIndex g : graph.bundle(x, y)) {
            const auto pg = cert.part_of(g);
            if (pg != pe && pg != pf) return Triple{v, y, bundle[a], bundle[b], g};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ConstructionResult path_or_cycle(const HColoredMultigraph& graph, std::size_t d) {
  constexpr Goal goal = Goal::PathOrCycle;
  const auto report = hypothesis_report(graph);
  require(graph, report, goal, d);
  const std::size_t n = graph.vertex_count();
  const DynamicGraph& dyn = report.dynamic;
  Lifter lifter(graph);

  const VertexIndex x = 0;
  const auto triple = find_triple(graph, lifter, dyn, x);
  if (!triple) violation(goal, "no three-part edge triple at '" + graph.vertex_id(x) + "'");

  // T = (u_0, ..., u_{j-1} = y, u_j = x, u_{j+1} = v, ..., u_k); every
  // bundle but E_{yx} is dynamic and neither end can be extended in G_dym.
  const auto t = grow_dynamic_path(dyn, {triple->y, x, triple->v});
  const std::size_t k = t.size() - 1;
  const std::size_t j =
      static_cast<std::size_t>(std::find(t.begin(), t.end(), x) - t.begin());
  if (j == 0 || j >= k || t[j - 1] != triple->y || t[j + 1] != triple->v) {
    violation(goal, "path growth lost the seed");
  }

  ConstructionResult result;
  result.goal = goal;
  result.max_changes = 0;

  if (k >= 2 * d) {
    // Walk x -g-> y -> ... -> u_0, reverse it, then leave x through e.
    DynamicHWalk back = start_walk(x, triple->g, triple->y);
    std::vector<VertexIndex> tail(t.rend() - static_cast<std::ptrdiff_t>(j), t.rend());
    lifter.extend(back, tail);
    DynamicHWalk walk = reversed(back);
    walk.steps.push_back({x, {triple->e}});
    walk.terminal = triple->v;
    lifter.extend(walk, std::span(t).subspan(j + 1));
    result.walk = std::move(walk);
    result.kind = ResultKind::HPath;
    result.guaranteed_length = std::min(2 * d, n);
    result.strategy = "long-path";
    return finish(graph, std::move(result));
  }

  std::vector<VertexIndex> seq;
  for (std::size_t i = j; i-- > 0;) seq.push_back(t[i]);  // y = u_{j-1} down to u_0
  if (j + 1 <= d) {
    std::size_t p = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      if (dyn.adjacent(t[0], t[i])) p = i;
    }
    if (p < j + 1) violation(goal, "the first vertex of the path has no dynamic neighbor past v");
    for (std::size_t i = p; i >= j + 1; --i) seq.push_back(t[i]);
    result.strategy = "cycle-through-first";
  } else {
    std::size_t p = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (dyn.adjacent(t[k], t[i])) {
        p = i;
        break;
      }
    }
    if (p + 1 > j) violation(goal, "the last vertex of the path has no dynamic neighbor before x");
    seq.resize(j - p);  // u_{j-1} down to u_p
    for (std::size_t i = k; i >= j + 1; --i) seq.push_back(t[i]);
    result.strategy = "cycle-through-last";
  }
  DynamicHWalk walk = start_walk(x, triple->g, triple->y);
  lifter.extend(walk, seq);
  close_with(graph, walk, triple->e, triple->f, goal);
  result.walk = std::move(walk);
  result.kind = ResultKind::HCycle;
  result.guaranteed_length = d + 1;
  return finish(graph, std::move(result));
}

ConstructionResult spanning_closed_trail(const HColoredMultigraph& graph) {
  const auto report = hypothesis_report(graph);
  require(graph, report, Goal::SpanningTrail);
  const auto circuit = euler_circuit(report.dynamic, 0);
  if (circuit.size() != report.dynamic.edge_count()) {
    violation(Goal::SpanningTrail, "circuit misses an edge of G_dym");
  }
  ConstructionResult result;
  result.walk = lift_closed(graph, circuit);
  result.goal = Goal::SpanningTrail;
  result.guaranteed_length = graph.vertex_count();
  result.max_changes = 1;
  result.kind = ResultKind::SpanningClosedTrail;
  result.strategy = "euler-circuit";
  return finish(graph, std::move(result));
}

namespace {

std::vector<VertexIndex> dynamic_hamiltonian_order(const HColoredMultigraph& graph,
                                                   const HypothesisReport& report, Goal goal) {
  std::vector<VertexIndex> order(graph.vertex_count());
  for (VertexIndex v = 0; v < order.size(); ++v) order[v] = v;
  auto cycle = exchange_hamiltonian_cycle(report.dynamic, std::move(order));
  if (!cycle) violation(goal, "no crossing pair for a gap in the vertex order");
  return *cycle;
}

ConstructionResult hamiltonian_dynamic(const HColoredMultigraph& graph,
                                       const HypothesisReport& report, Goal goal) {
  const auto cycle = dynamic_hamiltonian_order(graph, report, goal);
  ConstructionResult result;
  result.walk = lift_cycle(graph, cycle);
  result.goal = goal;
  result.guaranteed_length = graph.vertex_count();
  result.max_changes = 1;
  result.kind = ResultKind::DynamicHCycle;
  result.strategy = "exchange";
  return finish(graph, std::move(result));
}

ConstructionResult hamiltonian_h(const HColoredMultigraph& graph, const HypothesisReport& report,
                                 Goal goal) {
  auto c = dynamic_hamiltonian_order(graph, report, goal);
  const std::size_t n = c.size();
  ConstructionResult result;
  result.goal = goal;
  result.guaranteed_length = n;
  result.max_changes = 0;
  result.kind = ResultKind::HCycle;
  if (n == 2) {
    // The closing edge is chosen adjacent to the only other edge.
    result.walk = lift_cycle(graph, c);
    result.strategy = "two-vertex";
    return finish(graph, std::move(result));
  }

  Lifter lifter(graph);
  auto part = [&](VertexIndex x, EdgeIndex e) { return *lifter.certificate(x).part_of(e); };
  auto at = [&](std::size_t i) { return c[i % n]; };

  // Three parts among the two cycle bundles at some x_i.
  for (std::size_t i = 0; i < n; ++i) {
    const VertexIndex x = c[i];
    const VertexIndex prev = at(i + n - 1);
    const VertexIndex next = at(i + 1);
    const auto prev_bundle = graph.bundle(x, prev);
    const auto next_bundle = graph.bundle(x, next);
    for (EdgeIndex e : prev_bundle) {
      for (EdgeIndex g : next_bundle) {
        if (part(x, e) == part(x, g)) continue;
        std::optional<EdgeIndex> f;
        bool f_prev = false;
        for (EdgeIndex cand : prev_bundle) {
          if (!f && part(x, cand) != part(x, e) && part(x, cand) != part(x, g)) {
            f = cand;
            f_prev = true;
          }
        }
        for (EdgeIndex cand : next_bundle) {
          if (!f && part(x, cand) != part(x, e) && part(x, cand) != part(x, g)) f = cand;
        }
        if (!f) continue;
        std::vector<VertexIndex> seq;
        DynamicHWalk walk;
        if (f_prev) {
          // x -g-> next -> ... -> prev, back to x through e or f.
          for (std::size_t s = 1; s < n; ++s) seq.push_back(at(i + s));
          walk = start_walk(x, g, next);
          lifter.extend(walk, seq);
          close_with(graph, walk, e, *f, goal);
          result.strategy = "three-parts-forward";
        } else {
          for (std::size_t s = 1; s < n; ++s) seq.push_back(at(i + n - s));
          walk = start_walk(x, e, prev);
          lifter.extend(walk, seq);
          close_with(graph, walk, g, *f, goal);
          result.strategy = "three-parts-backward";
        }
        result.walk = std::move(walk);
        return finish(graph, std::move(result));
      }
    }
  }

  // Every x_i sees exactly two parts on its cycle bundles. Rotate to a
  // vertex with k >= 3 and leave it through an edge of a third part.
  const auto x0_it = std::find_if(c.begin(), c.end(),
                                  [&](VertexIndex v) { return report.vertices[v].k >= 3; });
  if (x0_it == c.end()) violation(goal, "no vertex with k_u >= 3 on the cycle");
  std::rotate(c.begin(), x0_it, c.end());
  const VertexIndex x0 = c[0];
  std::set<std::size_t> cycle_parts;
  for (EdgeIndex e : graph.bundle(x0, c[1])) cycle_parts.insert(part(x0, e));
  for (EdgeIndex e : graph.bundle(x0, c[n - 1])) cycle_parts.insert(part(x0, e));
  auto in_a = [&](EdgeIndex e) { return cycle_parts.count(part(x0, e)) == 0; };

  std::size_t p = 0;
  EdgeIndex g = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (EdgeIndex e : graph.bundle(x0, c[i])) {
      if (in_a(e)) {
        p = i;
        g = e;
        break;
      }
    }
  }
  if (p < 2 || p > n - 2) violation(goal, "no edge of a third part leaves x_0 off the cycle");

  const DynamicGraph& dyn = report.dynamic;
  std::vector<VertexIndex> seq;
  auto down = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from + 1; i-- > to;) seq.push_back(c[i]);
  };
  auto up = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i <= to; ++i) seq.push_back(c[i]);
  };

  if (dyn.adjacent(c[1], c[p + 1])) {
    down(p, 1);
    up(p + 1, n - 1);
    result.strategy = "reroute-direct";
  } else {
    std::size_t j = 0;
    for (std::size_t cand = 3; cand <= p && j == 0; ++cand) {
      if (dyn.adjacent(c[1], c[cand]) && dyn.adjacent(c[p + 1], c[cand - 1])) j = cand;
    }
    if (j != 0) {
      down(p, j);
      up(1, j - 1);
      up(p + 1, n - 1);
      result.strategy = "reroute-inner";
    } else {
      for (std::size_t cand = p + 2; cand < n && j == 0; ++cand) {
        if (dyn.adjacent(c[1], c[cand]) && dyn.adjacent(c[p + 1], at(cand + 1))) j = cand;
      }
      if (j == 0) violation(goal, "no rerouting index; the degree-sum count is contradicted");
      down(p, 1);
      down(j, p + 1);
      if (j + 1 <= n - 1) up(j + 1, n - 1);
      result.strategy = "reroute-outer";
    }
  }
  DynamicHWalk walk = start_walk(x0, g, c[p]);
  lifter.extend(walk, seq);
  lifter.close(walk);
  result.walk = std::move(walk);
  return finish(graph, std::move(result));
}

}  // namespace

ConstructionResult ore_hamiltonian_dynamic_cycle(const HColoredMultigraph& graph) {
  const auto report = hypothesis_report(graph);
  require(graph, report, Goal::OreDynamic);
  return hamiltonian_dynamic(graph, report, Goal::OreDynamic);
}

ConstructionResult ore_hamiltonian_h_cycle(const HColoredMultigraph& graph) {
  const auto report = hypothesis_report(graph);
  require(graph, report, Goal::OreH);
  return hamiltonian_h(graph, report, Goal::OreH);
}

ConstructionResult dirac_dynamic(const HColoredMultigraph& graph) {
  const auto report = hypothesis_report(graph);
  require(graph, report, Goal::DiracDynamic);
  return hamiltonian_dynamic(graph, report, Goal::DiracDynamic);
}

ConstructionResult dirac_h(const HColoredMultigraph& graph) {
  const auto report = hypothesis_report(graph);
  require(graph, report, Goal::DiracH);
  return hamiltonian_h(graph, report, Goal::DiracH);
}

ConstructionResult construct(const HColoredMultigraph& graph, Goal goal, std::size_t d) {
  switch (goal) {
    case Goal::LongCycle: return long_dynamic_cycle(graph, d);
    case Goal::PathOrCycle: return path_or_cycle(graph, d);
    case Goal::SpanningTrail: return spanning_closed_trail(graph);
    case Goal::OreDynamic: return ore_hamiltonian_dynamic_cycle(graph);
    case Goal::OreH: return ore_hamiltonian_h_cycle(graph);
    case Goal::DiracDynamic: return dirac_dynamic(graph);
    case Goal::DiracH: return dirac_h(graph);
    case Goal::CompleteDynamic: {
      const auto report = hypothesis_report(graph);
      require(graph, report, goal);
      return hamiltonian_dynamic(graph, report, goal);
    }
  }
  throw Error(ErrorKind::BadParameters, "unknown goal");
}

}  // namespace dynwalk
