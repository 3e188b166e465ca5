#include "dynwalk/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dynwalk/error.hpp"

namespace dynwalk {

namespace {

std::string vname(std::size_t i) { return "v" + std::to_string(i + 1); }

std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(vname(i));
  return out;
}

}  // namespace

HColoredMultigraph gen_glued_complete(std::size_t n, std::size_t m, const PatternGraph& pattern) {
  if (n < 3) throw Error(ErrorKind::BadParameters, "block size must be at least 3");
  if (m < 2) throw Error(ErrorKind::BadParameters, "multiplicity must be at least 2");
  if (!pattern.is_complete_loopless() || pattern.size() < m) {
    throw Error(ErrorKind::BadParameters,
                "pattern must be complete, loopless and have at least " + std::to_string(m) +
                    " colors");
  }
  std::vector<EdgeRecord> edges;
  std::size_t pair_index = 0;
  auto block = [&](std::size_t first) {
    for (std::size_t a = first; a < first + n; ++a) {
      for (std::size_t b = a + 1; b < first + n; ++b) {
        for (std::size_t s = 0; s < m; ++s) {
          edges.push_back({"e" + std::to_string(edges.size() + 1), vname(a), vname(b),
                           pattern.name(static_cast<ColorIndex>((pair_index + s) % pattern.size()))});
        }
        ++pair_index;
      }
    }
  };
  block(0);
  block(n - 1);
  return HColoredMultigraph::build(vertex_names(2 * n - 1), std::move(edges), pattern);
}

HColoredMultigraph gen_glued_complete(std::size_t n, std::size_t m) {
  return gen_glued_complete(n, m, PatternGraph::complete(std::max<std::size_t>(m, 2)));
}

HColoredMultigraph gen_complete_multigraph(std::size_t n, std::size_t m, std::size_t colors) {
  if (n < 2 || m < 1 || colors < m) {
    throw Error(ErrorKind::BadParameters, "need n >= 2 and 1 <= m <= colors");
  }
  const auto pattern = PatternGraph::complete(colors);
  std::vector<EdgeRecord> edges;
  std::size_t pair_index = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t s = 0; s < m; ++s) {
        edges.push_back({"e" + std::to_string(edges.size() + 1), vname(a), vname(b),
                         pattern.name(static_cast<ColorIndex>((pair_index + s) % colors))});
      }
      ++pair_index;
    }
  }
  return HColoredMultigraph::build(vertex_names(n), std::move(edges), pattern);
}

// ---------------------------------------------------------------------------
// Random instances

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Simple graph with an adjacency matrix, used as the planned G_dym.
struct Plan {
  explicit Plan(std::size_t n) : n(n), adj(n * n, 0), degree(n, 0) {}

  bool has(std::size_t a, std::size_t b) const { return adj[a * n + b] != 0; }
  void add(std::size_t a, std::size_t b) {
    if (a == b || has(a, b)) return;
    adj[a * n + b] = adj[b * n + a] = 1;
    ++degree[a];
    ++degree[b];
  }

  std::size_t n;
  std::vector<char> adj;
  std::vector<std::size_t> degree;
};

void random_edges(Plan& plan, Rng& rng, double p) {
  for (std::size_t a = 0; a < plan.n; ++a) {
    for (std::size_t b = a + 1; b < plan.n; ++b) {
      if (chance(rng, p)) plan.add(a, b);
    }
  }
}

void raise_min_degree(Plan& plan, Rng& rng, std::size_t target) {
  std::vector<std::size_t> order(plan.n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t u : order) {
    while (plan.degree[u] < target) {
      std::vector<std::size_t> candidates;
      for (std::size_t v = 0; v < plan.n; ++v) {
        if (v != u && !plan.has(u, v)) candidates.push_back(v);
      }
      if (candidates.empty()) return;
      // Prefer partners that are short themselves.
      std::vector<std::size_t> short_ones;
      for (std::size_t v : candidates) {
        if (plan.degree[v] < target) short_ones.push_back(v);
      }
      const auto& pool = short_ones.empty() ? candidates : short_ones;
      plan.add(u, pool[uniform(rng, 0, pool.size() - 1)]);
    }
  }
}

void complete_ore(Plan& plan, Rng& rng, std::size_t threshold) {
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t a = 0; a < plan.n; ++a) {
      for (std::size_t b = a + 1; b < plan.n; ++b) {
        if (!plan.has(a, b) && plan.degree[a] + plan.degree[b] < threshold) bad.emplace_back(a, b);
      }
    }
    if (bad.empty()) return;
    const auto [a, b] = bad[uniform(rng, 0, bad.size() - 1)];
    plan.add(a, b);
  }
}

void even_connected(Plan& plan, Rng& rng) {
  std::vector<std::size_t> order(plan.n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < plan.n; ++i) plan.add(order[i], order[(i + 1) % plan.n]);
  const std::size_t extra = uniform(rng, 0, 3);
  for (std::size_t r = 0; r < extra; ++r) {
    const std::size_t len = uniform(rng, 3, plan.n);
    std::shuffle(order.begin(), order.end(), rng);
    bool free = true;
    for (std::size_t i = 0; i < len; ++i) free &= !plan.has(order[i], order[(i + 1) % len]);
    if (!free) continue;
    for (std::size_t i = 0; i < len; ++i) plan.add(order[i], order[(i + 1) % len]);
  }
}

struct Palette {
  PatternGraph pattern;
  std::vector<std::vector<ColorIndex>> parts;  // colors of each part
};

Palette random_palette(Rng& rng, std::size_t min_parts) {
  const std::size_t count = uniform(rng, std::max<std::size_t>(min_parts, 2), 4);
  std::vector<std::size_t> sizes(count);
  for (auto& s : sizes) s = uniform(rng, 1, 2);
  Palette palette{PatternGraph::complete_multipartite(sizes), {}};
  ColorIndex next = 0;
  for (std::size_t s : sizes) {
    palette.parts.emplace_back();
    for (std::size_t i = 0; i < s; ++i) palette.parts.back().push_back(next++);
  }
  return palette;
}

ColorIndex color_in(Rng& rng, const Palette& palette, std::size_t part) {
  const auto& colors = palette.parts[part];
  return colors[uniform(rng, 0, colors.size() - 1)];
}

struct Draft {
  std::vector<std::vector<std::vector<ColorIndex>>> bundles;  // [a][b], a < b
  std::vector<std::set<std::size_t>> parts_at;
};

std::optional<HColoredMultigraph> attempt(std::size_t n, Rng& rng, Goal profile, std::size_t d) {
  const bool all_three = profile == Goal::PathOrCycle;
  const bool some_three = profile == Goal::OreH || profile == Goal::DiracH;
  const Palette palette = random_palette(rng, all_three || some_three ? 3 : 2);
  const std::size_t part_count = palette.parts.size();

  Plan plan(n);
  switch (profile) {
    case Goal::LongCycle:
    case Goal::PathOrCycle:
      random_edges(plan, rng, 0.15 + 0.5 * std::uniform_real_distribution<double>(0, 1)(rng));
      raise_min_degree(plan, rng, d);
      break;
    case Goal::SpanningTrail:
      even_connected(plan, rng);
      break;
    case Goal::OreDynamic:
    case Goal::OreH:
      random_edges(plan, rng, 0.2 + 0.4 * std::uniform_real_distribution<double>(0, 1)(rng));
      complete_ore(plan, rng, profile == Goal::OreDynamic ? n : n + 1);
      break;
    case Goal::DiracDynamic:
    case Goal::DiracH:
      random_edges(plan, rng, 0.3 * std::uniform_real_distribution<double>(0, 1)(rng));
      raise_min_degree(plan, rng, profile == Goal::DiracDynamic ? (n + 1) / 2 : n / 2 + 1);
      break;
    case Goal::CompleteDynamic:
      random_edges(plan, rng, 1.0);
      break;
  }

  Draft draft;
  draft.bundles.assign(n, std::vector<std::vector<ColorIndex>>(n));
  draft.parts_at.assign(n, {});
  auto put = [&](std::size_t a, std::size_t b, std::size_t part) {
    draft.bundles[a][b].push_back(color_in(rng, palette, part));
    draft.parts_at[a].insert(part);
    draft.parts_at[b].insert(part);
  };

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (plan.has(a, b)) {
        // A dynamic bundle: two edges from different parts, maybe one more.
        const std::size_t p = uniform(rng, 0, part_count - 1);
        const std::size_t q = (p + uniform(rng, 1, part_count - 1)) % part_count;
        put(a, b, p);
        put(a, b, q);
        if (chance(rng, 0.3)) put(a, b, uniform(rng, 0, part_count - 1));
      } else if (chance(rng, 0.35)) {
        // A non-dynamic bundle: every edge in one part.
        const std::size_t p = uniform(rng, 0, part_count - 1);
        put(a, b, p);
        if (chance(rng, 0.5)) put(a, b, p);
      }
    }
  }

  // Raise k_u to 3 where required by widening a dynamic bundle.
  auto raise_k = [&](std::size_t u) {
    if (draft.parts_at[u].size() >= 3) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u || !plan.has(u, v)) continue;
      auto& bundle = draft.bundles[std::min(u, v)][std::max(u, v)];
      if (bundle.size() >= 4) continue;
      for (std::size_t part = 0; part < part_count; ++part) {
        if (!draft.parts_at[u].count(part)) {
          put(std::min(u, v), std::max(u, v), part);
          return true;
        }
      }
    }
    return false;
  };
  if (all_three) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!raise_k(u)) return std::nullopt;
    }
  } else if (some_three) {
    if (!raise_k(uniform(rng, 0, n - 1))) return std::nullopt;
  }

  std::vector<EdgeRecord> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (ColorIndex c : draft.bundles[a][b]) {
        edges.push_back({"e" + std::to_string(edges.size() + 1), vname(a), vname(b),
                         palette.pattern.name(c)});
      }
    }
  }
  auto graph = HColoredMultigraph::build(vertex_names(n), std::move(edges), palette.pattern);
  const auto report = hypothesis_report(graph);
  if (!report.dynamic_matches_adjacent_pairs) return std::nullopt;
  if (premise_failure(graph, report, profile, d)) return std::nullopt;
  return graph;
}

}  // namespace

HColoredMultigraph gen_random(std::size_t n, std::uint64_t seed, Goal profile, std::size_t d) {
  if (goal_takes_degree(profile) && (d < 2 || n < d + 1)) {
    throw Error(ErrorKind::GenerationFailed,
                goal_token(profile) + " needs d >= 2 and at least d+1 vertices");
  }
  if (n < 2 || (profile == Goal::SpanningTrail && n < 3)) {
    throw Error(ErrorKind::GenerationFailed, "too few vertices for " + goal_token(profile));
  }
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(profile) * 1315423911ULL + n);
  constexpr int attempts = 64;
  for (int i = 0; i < attempts; ++i) {
    if (auto graph = attempt(n, rng, profile, d)) return std::move(*graph);
  }
  throw Error(ErrorKind::GenerationFailed, "no " + goal_token(profile) + " instance on " +
                                               std::to_string(n) + " vertices after " +
                                               std::to_string(attempts) + " attempts");
}

}  // namespace dynwalk
