#include "dynwalk/model.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "dynwalk/error.hpp"

namespace dynwalk {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      std::size_t is = i;
      std::size_t js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      const auto run_a = a.substr(is, ie - is);
      const auto run_b = b.substr(js, je - js);
      if (run_a.size() != run_b.size()) return run_a.size() < run_b.size();
      if (run_a != run_b) return run_a < run_b;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
    ++i;
    ++j;
  }
  if (i < a.size() || j < b.size()) return j < b.size();
  // Equal under the numeric reading ("v01" vs "v1"): fall back to bytes.
  return a < b;
}

// ---------------------------------------------------------------------------
// PatternGraph

PatternGraph::PatternGraph(std::vector<std::string> colors,
                           const std::vector<std::pair<std::string, std::string>>& edges)
    : colors_(std::move(colors)) {
  std::sort(colors_.begin(), colors_.end(), NaturalLess{});
  if (std::adjacent_find(colors_.begin(), colors_.end()) != colors_.end()) {
    throw Error(ErrorKind::BadParameters, "duplicate color in pattern");
  }
  adj_.assign(size() * size(), 0);
  for (const auto& [a, b] : edges) {
    const ColorIndex ia = index(a);
    const ColorIndex ib = index(b);
    adj_[ia * size() + ib] = 1;
    adj_[ib * size() + ia] = 1;
  }
  rebuild_relations();
}

PatternGraph PatternGraph::complete(std::size_t count) {
  return complete_multipartite(std::vector<std::size_t>(count, 1));
}

PatternGraph PatternGraph::complete_multipartite(const std::vector<std::size_t>& part_sizes) {
  std::vector<std::string> colors;
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    for (std::size_t k = 0; k < part_sizes[p]; ++k) {
      colors.push_back(std::to_string(colors.size() + 1));
      part_of.push_back(p);
    }
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t a = 0; a < colors.size(); ++a) {
    for (std::size_t b = a + 1; b < colors.size(); ++b) {
      if (part_of[a] != part_of[b]) edges.emplace_back(colors[a], colors[b]);
    }
  }
  return PatternGraph(std::move(colors), edges);
}

void PatternGraph::rebuild_relations() {
  const std::size_t k = size();
  incomparable_.assign(k * k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      bool a_in_b = true;
      bool b_in_a = true;
      bool equal = true;
      for (std::size_t x = 0; x < k; ++x) {
        const bool na = adj_[a * k + x] != 0;
        const bool nb = adj_[b * k + x] != 0;
        if (na && !nb) a_in_b = false;
        if (nb && !na) b_in_a = false;
        if (na != nb) equal = false;
      }
      incomparable_[a * k + b] = (!equal && !a_in_b && !b_in_a) ? 1 : 0;
    }
  }
}

std::optional<ColorIndex> PatternGraph::find(std::string_view color) const {
  auto it = std::lower_bound(colors_.begin(), colors_.end(), color, NaturalLess{});
  if (it == colors_.end() || *it != color) return std::nullopt;
  return static_cast<ColorIndex>(it - colors_.begin());
}

ColorIndex PatternGraph::index(std::string_view color) const {
  if (auto c = find(color)) return *c;
  throw Error(ErrorKind::UnknownColor, "color " + quoted(color) + " is not in the pattern");
}

std::vector<ColorIndex> PatternGraph::neighborhood(ColorIndex c) const {
  std::vector<ColorIndex> out;
  for (ColorIndex x = 0; x < size(); ++x) {
    if (adjacent(c, x)) out.push_back(x);
  }
  return out;
}

std::vector<std::pair<ColorIndex, ColorIndex>> PatternGraph::edges() const {
  std::vector<std::pair<ColorIndex, ColorIndex>> out;
  for (ColorIndex a = 0; a < size(); ++a) {
    for (ColorIndex b = a; b < size(); ++b) {
      if (adjacent(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool PatternGraph::has_loops() const {
  for (ColorIndex a = 0; a < size(); ++a) {
    if (adjacent(a, a)) return true;
  }
  return false;
}

bool PatternGraph::is_complete_loopless() const {
  for (ColorIndex a = 0; a < size(); ++a) {
    for (ColorIndex b = 0; b < size(); ++b) {
      if (adjacent(a, b) != (a != b)) return false;
    }
  }
  return true;
}

std::vector<std::string> pattern_neighborhood(const PatternGraph& pattern,
                                              std::string_view color) {
  std::vector<std::string> out;
  for (ColorIndex c : pattern.neighborhood(pattern.index(color))) out.push_back(pattern.name(c));
  return out;
}

// ---------------------------------------------------------------------------
// HColoredMultigraph

HColoredMultigraph HColoredMultigraph::build(std::vector<std::string> vertices,
                                             std::vector<EdgeRecord> edges,
                                             PatternGraph pattern) {
  HColoredMultigraph g;
  g.pattern_ = std::move(pattern);

  std::sort(vertices.begin(), vertices.end(), NaturalLess{});
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end()) {
    throw Error(ErrorKind::DuplicateVertexId, "vertex " + quoted(*dup) + " listed twice");
  }
  g.vertex_ids_ = std::move(vertices);

  std::sort(edges.begin(), edges.end(),
            [](const EdgeRecord& a, const EdgeRecord& b) { return natural_less(a.id, b.id); });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].id == edges[i - 1].id) {
      throw Error(ErrorKind::DuplicateEdgeId, "edge " + quoted(edges[i].id) + " listed twice");
    }
  }

  const std::size_t n = g.vertex_ids_.size();
  g.incident_.assign(n, {});
  g.neighbors_.assign(n, {});
  g.bundle_slot_.assign(n * n, -1);
  g.edges_.reserve(edges.size());

  for (const auto& rec : edges) {
    const auto u = g.find_vertex(rec.u);
    const auto v = g.find_vertex(rec.v);
    if (!u || !v) {
      throw Error(ErrorKind::DanglingEndpoint,
                  "edge " + quoted(rec.id) + " uses unknown vertex " + quoted(!u ? rec.u : rec.v));
    }
    if (*u == *v) {
      throw Error(ErrorKind::LoopEdge, "edge " + quoted(rec.id) + " is a loop at " + quoted(rec.u));
    }
    const auto color = g.pattern_.find(rec.color);
    if (!color) {
      throw Error(ErrorKind::UnknownColor,
                  "edge " + quoted(rec.id) + " has color " + quoted(rec.color) +
                      " which is not in the pattern");
    }
    const auto e = static_cast<EdgeIndex>(g.edges_.size());
    g.edges_.push_back(Edge{rec.id, *u, *v, *color});
    g.incident_[*u].push_back(e);
    g.incident_[*v].push_back(e);
    auto& slot = g.bundle_slot_[*u * n + *v];
    if (slot < 0) {
      slot = static_cast<std::int32_t>(g.bundles_.size());
      g.bundle_slot_[*v * n + *u] = slot;
      g.bundles_.emplace_back();
      g.neighbors_[*u].push_back(*v);
      g.neighbors_[*v].push_back(*u);
    }
    g.bundles_[static_cast<std::size_t>(slot)].push_back(e);
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());
  return g;
}

std::optional<VertexIndex> HColoredMultigraph::find_vertex(std::string_view id) const {
  auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id, NaturalLess{});
  if (it == vertex_ids_.end() || *it != id) return std::nullopt;
  return static_cast<VertexIndex>(it - vertex_ids_.begin());
}

VertexIndex HColoredMultigraph::vertex(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw Error(ErrorKind::UnknownId, "unknown vertex " + quoted(id));
}

std::optional<EdgeIndex> HColoredMultigraph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, std::string_view key) { return natural_less(e.id, key); });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

EdgeIndex HColoredMultigraph::edge_index(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw Error(ErrorKind::UnknownId, "unknown edge " + quoted(id));
}

VertexIndex HColoredMultigraph::other_end(EdgeIndex e, VertexIndex from) const {
  const Edge& edge = edges_.at(e);
  return edge.u == from ? edge.v : edge.u;
}

bool HColoredMultigraph::joins(EdgeIndex e, VertexIndex a, VertexIndex b) const {
  const Edge& edge = edges_.at(e);
  return (edge.u == a && edge.v == b) || (edge.u == b && edge.v == a);
}

std::span<const EdgeIndex> HColoredMultigraph::bundle(VertexIndex u, VertexIndex v) const {
  const std::size_t n = vertex_ids_.size();
  if (u >= n || v >= n) return {};
  const auto slot = bundle_slot_[u * n + v];
  if (slot < 0) return {};
  return bundles_[static_cast<std::size_t>(slot)];
}

std::size_t HColoredMultigraph::max_bundle_width() const {
  std::size_t width = 0;
  for (const auto& b : bundles_) width = std::max(width, b.size());
  return width;
}

std::vector<EdgeRecord> HColoredMultigraph::records() const {
  std::vector<EdgeRecord> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) {
    out.push_back({e.id, vertex_ids_[e.u], vertex_ids_[e.v], pattern_.name(e.color)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Walks

std::size_t DynamicHWalk::changes() const {
  std::size_t total = 0;
  for (const auto& s : steps) total += s.bundle.empty() ? 0 : s.bundle.size() - 1;
  return total;
}

std::vector<VertexIndex> DynamicHWalk::vertices() const {
  std::vector<VertexIndex> out;
  out.reserve(steps.size() + 1);
  for (const auto& s : steps) out.push_back(s.from);
  out.push_back(terminal);
  return out;
}

DynamicHWalk reversed(const DynamicHWalk& walk) {
  DynamicHWalk out;
  out.closed = walk.closed;
  if (walk.steps.empty()) return walk;
  const auto verts = walk.vertices();
  const std::size_t n = walk.steps.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = n - 1 - k;
    WalkStep step{verts[i + 1], walk.steps[i].bundle};
    std::reverse(step.bundle.begin(), step.bundle.end());
    out.steps.push_back(std::move(step));
  }
  out.terminal = verts[0];
  return out;
}

DynamicHWalk resolve_walk(const HColoredMultigraph& graph, const WalkDescription& description) {
  if (description.steps.empty()) throw Error(ErrorKind::MalformedWalk, "walk has no steps");
  DynamicHWalk walk;
  walk.closed = description.closed;
  for (std::size_t i = 0; i < description.steps.size(); ++i) {
    const auto& s = description.steps[i];
    if (s.edges.empty()) {
      throw Error(ErrorKind::MalformedWalk, "step " + std::to_string(i) + " has an empty bundle", i);
    }
    WalkStep step{graph.vertex(s.from), {}};
    for (const auto& id : s.edges) step.bundle.push_back(graph.edge_index(id));
    walk.steps.push_back(std::move(step));
  }
  if (description.end) {
    walk.terminal = graph.vertex(*description.end);
  } else if (walk.closed) {
    walk.terminal = walk.steps.front().from;
  } else {
    const auto& last = walk.steps.back();
    const Edge& e = graph.edge(last.bundle.front());
    if (e.u != last.from && e.v != last.from) {
      throw Error(ErrorKind::MalformedWalk,
                  "cannot infer the end vertex: edge " + quoted(e.id) + " does not leave " +
                      quoted(graph.vertex_id(last.from)),
                  description.steps.size() - 1);
    }
    walk.terminal = graph.other_end(last.bundle.front(), last.from);
  }
  return walk;
}

WalkDescription describe_walk(const HColoredMultigraph& graph, const DynamicHWalk& walk) {
  WalkDescription out;
  out.closed = walk.closed;
  for (const auto& s : walk.steps) {
    WalkDescription::Step step{graph.vertex_id(s.from), {}};
    for (EdgeIndex e : s.bundle) step.edges.push_back(graph.edge(e).id);
    out.steps.push_back(std::move(step));
  }
  if (!walk.closed) out.end = graph.vertex_id(walk.terminal);
  return out;
}

std::string format_walk(const HColoredMultigraph& graph, const DynamicHWalk& walk) {
  std::ostringstream os;
  os << '(';
  for (const auto& s : walk.steps) {
    os << graph.vertex_id(s.from) << ",[";
    for (std::size_t j = 0; j < s.bundle.size(); ++j) {
      if (j) os << ',';
      os << graph.edge(s.bundle[j]).id;
    }
    os << "],";
  }
  os << graph.vertex_id(walk.closed && !walk.steps.empty() ? walk.steps.front().from : walk.terminal)
     << ')';
  return os.str();
}

std::string WalkClassification::kind() const {
  if (!is_dynamic_h_walk) return "not a dynamic H-walk";
  const std::string prefix = changes == 0 ? "H-" : "dynamic H-";
  if (is_cycle) return prefix + "cycle";
  if (is_path) return prefix + "path";
  const std::string head = closed ? "closed " : "";
  if (is_trail) return head + prefix + "trail";
  return head + prefix + "walk";
}

WalkClassification verify_walk(const HColoredMultigraph& graph, const DynamicHWalk& walk) {
  if (walk.steps.empty()) throw Error(ErrorKind::MalformedWalk, "walk has no steps");
  const std::size_t n = walk.steps.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = walk.steps[i];
    if (s.from >= graph.vertex_count()) {
      throw Error(ErrorKind::UnknownId, "step " + std::to_string(i) + " starts at an unknown vertex", i);
    }
    if (s.bundle.empty()) {
      throw Error(ErrorKind::MalformedWalk, "step " + std::to_string(i) + " has an empty bundle", i);
    }
    for (EdgeIndex e : s.bundle) {
      if (e >= graph.edge_count()) {
        throw Error(ErrorKind::UnknownId, "step " + std::to_string(i) + " uses an unknown edge", i);
      }
    }
  }
  if (walk.terminal >= graph.vertex_count()) {
    throw Error(ErrorKind::UnknownId, "walk ends at an unknown vertex");
  }

  WalkClassification out;
  out.closed = walk.closed;
  out.length = n;
  out.changes = walk.changes();

  const auto verts = walk.vertices();
  const auto vid = [&](std::size_t i) { return quoted(graph.vertex_id(verts[i])); };
  const auto eid = [&](EdgeIndex e) { return quoted(graph.edge(e).id); };
  const auto cname = [&](EdgeIndex e) { return graph.pattern().name(graph.color(e)); };

  auto violate = [&](ViolationKind kind, std::size_t step, std::string message) {
    if (!out.first_violation) out.first_violation = Violation{kind, step, std::move(message)};
  };

  for (std::size_t i = 0; i < n && !out.first_violation; ++i) {
    for (EdgeIndex e : walk.steps[i].bundle) {
      if (!graph.joins(e, verts[i], verts[i + 1])) {
        violate(ViolationKind::EdgeNotInBundle, i,
                "edge " + eid(e) + " in step " + std::to_string(i) + " does not join " + vid(i) +
                    " and " + vid(i + 1));
        break;
      }
    }
  }
  if (walk.closed && !out.first_violation && verts.back() != verts.front()) {
    violate(ViolationKind::NotReturning, n - 1,
            "closed walk ends at " + vid(n) + " instead of " + vid(0));
  }
  for (std::size_t i = 0; i + 1 < n && !out.first_violation; ++i) {
    const EdgeIndex last = walk.steps[i].bundle.back();
    const EdgeIndex next = walk.steps[i + 1].bundle.front();
    if (!graph.colors_adjacent(last, next)) {
      violate(ViolationKind::ForbiddenTransition, i,
              "transition between step " + std::to_string(i) + " and step " + std::to_string(i + 1) +
                  " at " + vid(i + 1) + ": " + cname(last) + " (" + eid(last) + ") to " +
                  cname(next) + " (" + eid(next) + ") is not an edge of the pattern");
    }
  }
  if (walk.closed && !out.first_violation) {
    const EdgeIndex last = walk.steps.back().bundle.back();
    const EdgeIndex first = walk.steps.front().bundle.front();
    if (!graph.colors_adjacent(last, first)) {
      violate(ViolationKind::ForbiddenClosingTransition, n - 1,
              "closing transition at " + vid(0) + ": " + cname(last) + " (" + eid(last) + ") to " +
                  cname(first) + " (" + eid(first) + ") is not an edge of the pattern");
    }
  }

  out.is_dynamic_h_walk = !out.first_violation.has_value();
  out.is_h_walk = out.is_dynamic_h_walk && out.changes == 0;

  std::set<EdgeIndex> seen_edges;
  bool repeats_edge = false;
  for (const auto& s : walk.steps) {
    for (EdgeIndex e : s.bundle) repeats_edge |= !seen_edges.insert(e).second;
  }
  const std::size_t inner = walk.closed ? n : n + 1;  // v_n == v_0 for closed walks
  std::set<VertexIndex> seen_vertices(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(inner));
  out.distinct_vertices = std::set<VertexIndex>(verts.begin(), verts.end()).size();
  const bool distinct = seen_vertices.size() == inner;

  out.is_trail = out.is_dynamic_h_walk && !repeats_edge;
  out.is_path = out.is_trail && !walk.closed && distinct;
  out.is_cycle = out.is_trail && walk.closed && distinct && n >= 2;
  return out;
}

WalkClassification verify_walk(const HColoredMultigraph& graph,
                               const WalkDescription& description) {
  return verify_walk(graph, resolve_walk(graph, description));
}

}  // namespace dynwalk
