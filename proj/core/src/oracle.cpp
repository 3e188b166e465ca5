#include "dynwalk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "dynwalk/error.hpp"

namespace dynwalk {

namespace {

/// Canonical bundle: [f] when f == l, else [f, l].
struct Option {
  ColorIndex last;
  EdgeIndex f;
  EdgeIndex l;
};

WalkStep make_step(VertexIndex from, const Option& opt) {
  WalkStep step{from, {opt.f}};
  if (opt.l != opt.f) step.bundle.push_back(opt.l);
  return step;
}

class Search {
 public:
  Search(const HColoredMultigraph& graph, bool dynamic)
      : graph_(graph),
        dynamic_(dynamic),
        n_(graph.vertex_count()),
        k_(graph.pattern().size()),
        cache_(n_ * n_ * k_),
        cached_(n_ * n_ * k_, 0) {}

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const HColoredMultigraph& graph() const { return graph_; }
  bool adj(ColorIndex a, ColorIndex b) const { return graph_.pattern().adjacent(a, b); }
  ColorIndex color(EdgeIndex e) const { return graph_.color(e); }

  /// Ways to cross E_uv after an edge of color `prev`, one per last color,
  /// single edges preferred.
  const std::vector<Option>& step_options(VertexIndex u, VertexIndex v, ColorIndex prev) {
    const std::size_t key = (u * n_ + v) * k_ + prev;
    if (cached_[key]) return cache_[key];
    cached_[key] = 1;
    auto& out = cache_[key];
    const auto bundle = graph_.bundle(u, v);
    for (EdgeIndex l : bundle) {
      if (adj(prev, color(l))) add(out, {color(l), l, l});
    }
    if (dynamic_) {
      for (EdgeIndex l : bundle) {
        for (EdgeIndex f : bundle) {
          if (f != l && adj(prev, color(f))) {
            add(out, {color(l), f, l});
            break;
          }
        }
      }
    }
    return out;
  }

  /// First bundles out of u toward v whose first edge has color `first`.
  std::vector<Option> first_options(VertexIndex u, VertexIndex v, ColorIndex first) const {
    std::vector<Option> out;
    const auto bundle = graph_.bundle(u, v);
    for (EdgeIndex l : bundle) {
      if (color(l) == first) add(out, {color(l), l, l});
    }
    if (dynamic_) {
      for (EdgeIndex l : bundle) {
        for (EdgeIndex f : bundle) {
          if (f != l && color(f) == first) {
            add(out, {color(l), f, l});
            break;
          }
        }
      }
    }
    return out;
  }

  /// A closing bundle across E_uv after `prev` whose last edge meets `first`.
  std::optional<Option> close_option(VertexIndex u, VertexIndex v, ColorIndex prev,
                                     ColorIndex first) const {
    const auto bundle = graph_.bundle(u, v);
    for (EdgeIndex l : bundle) {
      if (adj(prev, color(l)) && adj(color(l), first)) return Option{color(l), l, l};
    }
    if (!dynamic_) return std::nullopt;
    for (EdgeIndex l : bundle) {
      if (!adj(color(l), first)) continue;
      for (EdgeIndex f : bundle) {
        if (f != l && adj(prev, color(f))) return Option{color(l), f, l};
      }
    }
    return std::nullopt;
  }

 private:
  static void add(std::vector<Option>& out, Option opt) {
    for (const auto& o : out) {
      if (o.last == opt.last) return;
    }
    out.push_back(opt);
  }

  const HColoredMultigraph& graph_;
  bool dynamic_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::vector<Option>> cache_;
  std::vector<char> cached_;
};

/// Two-vertex cycle on u, v with bundles of distinct edges.
std::optional<DynamicHWalk> two_cycle(const Search& search, VertexIndex u, VertexIndex v,
                                      bool dynamic) {
  const auto bundle = search.graph().bundle(u, v);
  std::vector<std::pair<EdgeIndex, EdgeIndex>> shapes;  // (first, last)
  for (EdgeIndex a : bundle) {
    shapes.emplace_back(a, a);
  }
  if (dynamic) {
    for (EdgeIndex a : bundle) {
      for (EdgeIndex b : bundle) {
        if (a != b) shapes.emplace_back(a, b);
      }
    }
  }
  for (const auto& [f0, l0] : shapes) {
    for (const auto& [f1, l1] : shapes) {
      if (f1 == f0 || f1 == l0 || l1 == f0 || l1 == l0) continue;
      if (!search.adj(search.color(l0), search.color(f1))) continue;
      if (!search.adj(search.color(l1), search.color(f0))) continue;
      DynamicHWalk walk;
      walk.closed = true;
      walk.terminal = u;
      walk.steps.push_back(make_step(u, {search.color(l0), f0, l0}));
      walk.steps.push_back(make_step(v, {search.color(l1), f1, l1}));
      return walk;
    }
  }
  return std::nullopt;
}

/// One witness cycle per vertex set (indexed by bitmask), if any exists.
std::vector<std::optional<DynamicHWalk>> cycles_by_mask(const HColoredMultigraph& graph,
                                                        bool dynamic) {
  Search search(graph, dynamic);
  const std::size_t n = search.n();
  const std::size_t k = search.k();
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::optional<DynamicHWalk>> by_mask(full);

  for (VertexIndex s = 0; s < n; ++s) {
    for (VertexIndex v = s + 1; v < n; ++v) {
      if (auto w = two_cycle(search, s, v, dynamic)) by_mask[(1u << s) | (1u << v)] = std::move(w);
    }
  }

  constexpr std::int64_t unreached = -2;
  constexpr std::int64_t root = -1;
  std::vector<std::int64_t> parent(full * n * k);
  std::vector<Option> via(full * n * k);
  auto id = [&](std::size_t mask, std::size_t cur, std::size_t color) {
    return (mask * n + cur) * k + color;
  };

  for (VertexIndex s = 0; s < n; ++s) {
    for (ColorIndex first = 0; first < k; ++first) {
      std::fill(parent.begin(), parent.end(), unreached);
      for (VertexIndex v = s + 1; v < n; ++v) {
        for (const auto& opt : search.first_options(s, v, first)) {
          const auto sid = id((1u << s) | (1u << v), v, opt.last);
          parent[sid] = root;
          via[sid] = opt;
        }
      }
      auto rebuild = [&](std::size_t sid, const Option& closing, VertexIndex cur) {
        DynamicHWalk walk;
        walk.closed = true;
        walk.terminal = s;
        walk.steps.push_back(make_step(cur, closing));
        std::size_t at = sid;
        while (true) {
          const std::int64_t up = parent[at];
          const VertexIndex from =
              up == root ? s : static_cast<VertexIndex>((static_cast<std::size_t>(up) / k) % n);
          walk.steps.push_back(make_step(from, via[at]));
          if (up == root) break;
          at = static_cast<std::size_t>(up);
        }
        std::reverse(walk.steps.begin(), walk.steps.end());
        return walk;
      };

      const std::size_t low = (std::size_t{1} << s) - 1;
      for (std::size_t mask = 0; mask < full; ++mask) {
        if (!(mask >> s & 1u) || (mask & low)) continue;
        const int size = std::popcount(mask);
        if (size < 2) continue;
        for (VertexIndex cur = s + 1; cur < n; ++cur) {
          if (!(mask >> cur & 1u)) continue;
          for (ColorIndex last = 0; last < k; ++last) {
            const auto sid = id(mask, cur, last);
            if (parent[sid] == unreached) continue;
            if (size >= 3 && !by_mask[mask]) {
              if (auto closing = search.close_option(cur, s, last, first)) {
                by_mask[mask] = rebuild(sid, *closing, cur);
              }
            }
            for (VertexIndex v = s + 1; v < n; ++v) {
              if (mask >> v & 1u) continue;
              for (const auto& opt : search.step_options(cur, v, last)) {
                const auto nid = id(mask | (1u << v), v, opt.last);
                if (parent[nid] != unreached) continue;
                parent[nid] = static_cast<std::int64_t>(sid);
                via[nid] = opt;
              }
            }
          }
        }
      }
    }
  }
  return by_mask;
}

/// Longest H-path (or dynamic H-path) witness, by vertex set.
std::optional<DynamicHWalk> longest_path(const HColoredMultigraph& graph, bool dynamic) {
  Search search(graph, dynamic);
  const std::size_t n = search.n();
  const std::size_t k = search.k();
  const std::size_t full = std::size_t{1} << n;
  constexpr std::int64_t unreached = -2;
  std::vector<std::int64_t> parent(full * n * k, unreached);
  std::vector<Option> via(full * n * k);
  std::vector<VertexIndex> origin(full * n * k);
  auto id = [&](std::size_t mask, std::size_t cur, std::size_t color) {
    return (mask * n + cur) * k + color;
  };
  for (EdgeIndex index = 0; index < graph.edge_count(); ++index) {
    const Edge& e = graph.edge(index);
    for (const auto& [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const auto sid = id((1u << a) | (1u << b), b, e.color);
      if (parent[sid] != unreached) continue;
      parent[sid] = -1;
      via[sid] = {e.color, index, index};
      origin[sid] = a;
    }
  }
  std::optional<std::size_t> best;
  int best_size = 0;
  for (std::size_t mask = 0; mask < full; ++mask) {
    const int size = std::popcount(mask);
    if (size < 2) continue;
    for (VertexIndex cur = 0; cur < n; ++cur) {
      if (!(mask >> cur & 1u)) continue;
      for (ColorIndex last = 0; last < k; ++last) {
        const auto sid = id(mask, cur, last);
        if (parent[sid] == unreached) continue;
        if (size > best_size) {
          best_size = size;
          best = sid;
        }
        for (VertexIndex v = 0; v < n; ++v) {
          if (mask >> v & 1u) continue;
          for (const auto& opt : search.step_options(cur, v, last)) {
            const auto nid = id(mask | (1u << v), v, opt.last);
            if (parent[nid] != unreached) continue;
            parent[nid] = static_cast<std::int64_t>(sid);
            via[nid] = opt;
            origin[nid] = origin[sid];
          }
        }
      }
    }
  }
  if (!best) return std::nullopt;
  DynamicHWalk walk;
  walk.terminal = static_cast<VertexIndex>((*best / k) % n);
  std::size_t at = *best;
  while (true) {
    const std::int64_t up = parent[at];
    const VertexIndex from =
        up < 0 ? origin[at] : static_cast<VertexIndex>((static_cast<std::size_t>(up) / k) % n);
    walk.steps.push_back(make_step(from, via[at]));
    if (up < 0) break;
    at = static_cast<std::size_t>(up);
  }
  std::reverse(walk.steps.begin(), walk.steps.end());
  return walk;
}

/// Iterative deepening on the length of a closed dynamic H-trail through
/// every vertex, so the shortest one is found first.
std::optional<DynamicHWalk> spanning_trail(const HColoredMultigraph& graph, std::size_t budget) {
  const std::size_t n = graph.vertex_count();
  if (n < 2) return std::nullopt;
  const auto& pattern = graph.pattern();
  std::vector<char> used(graph.edge_count(), 0);
  std::vector<std::size_t> visits(n, 0);
  std::size_t distinct = 1;
  visits[0] = 1;
  DynamicHWalk walk;
  walk.closed = true;
  std::size_t nodes = 0;

  std::size_t limit = 0;

  std::function<bool(VertexIndex, std::optional<EdgeIndex>)> dfs =
      [&](VertexIndex cur, std::optional<EdgeIndex> last) -> bool {
    if (++nodes > budget) {
      throw Error(ErrorKind::BoundsExceeded, "spanning trail search exceeded its budget");
    }
    if (cur == 0 && !walk.steps.empty() && distinct == n &&
        pattern.adjacent(graph.color(*last), graph.color(walk.steps.front().bundle.front()))) {
      return true;
    }
    const std::size_t needed = n - distinct + (cur == 0 ? 0 : 1);
    if (walk.steps.size() + std::max<std::size_t>(needed, 1) > limit) return false;
    for (VertexIndex v : graph.neighbors(cur)) {
      const auto bundle = graph.bundle(cur, v);
      auto ok_first = [&](EdgeIndex f) {
        return !used[f] && (!last || pattern.adjacent(graph.color(*last), graph.color(f)));
      };
      std::vector<std::pair<EdgeIndex, EdgeIndex>> shapes;
      for (EdgeIndex l : bundle) {
        if (ok_first(l)) shapes.emplace_back(l, l);
      }
      for (EdgeIndex l : bundle) {
        if (used[l] || ok_first(l)) continue;
        for (EdgeIndex f : bundle) {
          if (f != l && ok_first(f)) shapes.emplace_back(f, l);
        }
      }
      for (const auto& [f, l] : shapes) {
        used[f] = used[l] = 1;
        distinct += visits[v]++ == 0 ? 1 : 0;
        walk.steps.push_back(make_step(cur, {graph.color(l), f, l}));
        if (dfs(v, l)) return true;
        walk.steps.pop_back();
        distinct -= --visits[v] == 0 ? 1 : 0;
        used[f] = used[l] = 0;
      }
    }
    return false;
  };
  for (limit = n; limit <= graph.edge_count(); ++limit) {
    if (dfs(0, std::nullopt)) {
      walk.terminal = 0;
      return walk;
    }
  }
  return std::nullopt;
}

std::vector<DynamicHWalk> enumerate_cycles(const HColoredMultigraph& graph, std::size_t max_len,
                                           std::optional<VertexIndex> through, std::size_t budget) {
  const std::size_t n = graph.vertex_count();
  const auto& pattern = graph.pattern();
  const std::size_t limit = max_len == 0 ? n : std::min(max_len, n);
  std::vector<DynamicHWalk> out;
  std::vector<VertexIndex> seq;
  std::vector<EdgeIndex> lasts;
  std::vector<char> on(n, 0);
  auto adj = [&](EdgeIndex a, EdgeIndex b) { return pattern.adjacent(graph.color(a), graph.color(b)); };

  // Least f != l in E_uv continuing from `prev`.
  auto lead = [&](VertexIndex u, VertexIndex v, EdgeIndex prev, EdgeIndex l) -> std::optional<EdgeIndex> {
    for (EdgeIndex f : graph.bundle(u, v)) {
      if (f != l && adj(prev, f)) return f;
    }
    return std::nullopt;
  };

  auto emit = [&]() {
    const std::size_t len = seq.size();
    if (len < 2) return;
    if (len >= 3 && seq[1] > seq[len - 1]) return;  // keep one direction
    if (through && !on[*through]) return;
    DynamicHWalk walk;
    walk.closed = true;
    walk.terminal = seq[0];
    // Bundle 0 follows the closing edge.
    const EdgeIndex closing = lasts[len - 1];
    std::optional<EdgeIndex> f0 = adj(closing, lasts[0]) ? std::optional(lasts[0])
                                                         : lead(seq[0], seq[1], closing, lasts[0]);
    if (!f0) return;
    walk.steps.push_back(make_step(seq[0], {graph.color(lasts[0]), *f0, lasts[0]}));
    for (std::size_t i = 1; i < len; ++i) {
      const VertexIndex to = seq[(i + 1) % len];
      const EdgeIndex l = lasts[i];
      const EdgeIndex f = adj(lasts[i - 1], l) ? l : *lead(seq[i], to, lasts[i - 1], l);
      walk.steps.push_back(make_step(seq[i], {graph.color(l), f, l}));
    }
    const auto cls = verify_walk(graph, walk);
    if (!cls.is_cycle) return;
    if (out.size() >= budget) {
      throw Error(ErrorKind::BoundsExceeded, "cycle enumeration exceeded its budget");
    }
    out.push_back(std::move(walk));
  };

  std::function<void()> extend = [&]() {
    const VertexIndex cur = seq.back();
    const VertexIndex s = seq.front();
    const std::size_t i = seq.size() - 1;  // index of the step leaving cur
    // Close back to s.
    if (seq.size() >= 2) {
      for (EdgeIndex l : graph.bundle(cur, s)) {
        if (!adj(lasts[i - 1], l) && !lead(cur, s, lasts[i - 1], l)) continue;
        lasts.push_back(l);
        emit();
        lasts.pop_back();
      }
    }
    if (seq.size() >= limit) return;
    for (VertexIndex v : graph.neighbors(cur)) {
      if (v <= s || on[v]) continue;
      for (EdgeIndex l : graph.bundle(cur, v)) {
        if (i > 0 && !adj(lasts[i - 1], l) && !lead(cur, v, lasts[i - 1], l)) continue;
        seq.push_back(v);
        on[v] = 1;
        lasts.push_back(l);
        extend();
        lasts.pop_back();
        on[v] = 0;
        seq.pop_back();
      }
    }
  };

  for (VertexIndex s = 0; s < n; ++s) {
    seq = {s};
    on.assign(n, 0);
    on[s] = 1;
    lasts.clear();
    extend();
  }
  return out;
}

}  // namespace

OracleAnswer oracle_solve(const HColoredMultigraph& graph, const OracleQuery& query) {
  const std::size_t n = graph.vertex_count();
  if (n > std::min(query.bounds.max_vertices, kOracleHardVertexCap)) {
    throw Error(ErrorKind::BoundsExceeded, "graph has " + std::to_string(n) + " vertices, cap is " +
                                               std::to_string(std::min(query.bounds.max_vertices, kOracleHardVertexCap)));
  }
  if (graph.max_bundle_width() > query.bounds.max_bundle_width) {
    throw Error(ErrorKind::BoundsExceeded,
                "bundle width " + std::to_string(graph.max_bundle_width()) + " exceeds cap " +
                    std::to_string(query.bounds.max_bundle_width));
  }
  if (query.through && *query.through >= n) {
    throw Error(ErrorKind::UnknownId, "vertex index out of range");
  }

  OracleAnswer answer;
  auto longest = [&](bool dynamic) {
    const auto by_mask = cycles_by_mask(graph, dynamic);
    for (std::size_t mask = 0; mask < by_mask.size(); ++mask) {
      if (!by_mask[mask]) continue;
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (!answer.exists || size > answer.value) {
        answer.exists = true;
        answer.value = size;
        answer.witness = by_mask[mask];
      }
    }
  };
  auto hamiltonian = [&](bool dynamic) {
    if (n < 2) return;
    const auto by_mask = cycles_by_mask(graph, dynamic);
    const auto& full = by_mask[(std::size_t{1} << n) - 1];
    if (full) {
      answer.exists = true;
      answer.value = n;
      answer.witness = full;
    }
  };

  switch (query.target) {
    case OracleTarget::HCycleThrough: {
      if (!query.through) throw Error(ErrorKind::BadParameters, "query needs a vertex");
      const auto by_mask = cycles_by_mask(graph, false);
      for (std::size_t mask = 0; mask < by_mask.size(); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (by_mask[mask] && (mask >> *query.through & 1u) && size >= query.min_len) {
          answer.exists = true;
          answer.value = size;
          answer.witness = by_mask[mask];
          break;
        }
      }
      break;
    }
    case OracleTarget::LongestDynamicCycle: longest(true); break;
    case OracleTarget::LongestHCycle: longest(false); break;
    case OracleTarget::HamiltonianHCycle: hamiltonian(false); break;
    case OracleTarget::HamiltonianDynamicCycle: hamiltonian(true); break;
    case OracleTarget::LongestHPath:
      if (auto path = longest_path(graph, false)) {
        answer.exists = true;
        answer.value = path->length();
        answer.witness = std::move(path);
      }
      break;
    case OracleTarget::SpanningClosedTrail:
      if (auto trail = spanning_trail(graph, query.bounds.budget)) {
        answer.exists = true;
        answer.value = trail->length();
        answer.witness = std::move(trail);
      }
      break;
    case OracleTarget::EnumerateDynamicCycles:
      answer.walks = enumerate_cycles(graph, query.max_len, query.through, query.bounds.budget);
      answer.exists = !answer.walks.empty();
      answer.value = answer.walks.size();
      break;
  }
  return answer;
}

}  // namespace dynwalk
