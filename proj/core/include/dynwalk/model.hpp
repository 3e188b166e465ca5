#pragma once

// Core data model: the color-transition pattern H, H-colored multigraphs,
// bundle-structured (dynamic) walks and the walk verifier.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dynwalk {

using VertexIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;
using ColorIndex = std::uint32_t;

/// Ordering used for every deterministic tie-break on ids: runs of digits
/// compare by numeric value, everything else bytewise ("e2" < "e10").
bool natural_less(std::string_view a, std::string_view b);

struct NaturalLess {
  bool operator()(std::string_view a, std::string_view b) const {
    return natural_less(a, b);
  }
};

/// The pattern graph H. Vertices are colors, edges are permitted
/// consecutive-color transitions; loops are allowed.
class PatternGraph {
 public:
  PatternGraph() = default;
  PatternGraph(std::vector<std::string> colors,
               const std::vector<std::pair<std::string, std::string>>& edges);

  /// Complete loopless pattern on colors "1".."count".
  static PatternGraph complete(std::size_t count);
  /// Loopless complete multipartite pattern; colors are numbered "1".. in
  /// part order, so part i holds a consecutive block of colors.
  static PatternGraph complete_multipartite(const std::vector<std::size_t>& part_sizes);

  std::size_t size() const { return colors_.size(); }
  const std::vector<std::string>& colors() const { return colors_; }
  const std::string& name(ColorIndex c) const { return colors_.at(c); }
  std::optional<ColorIndex> find(std::string_view color) const;
  ColorIndex index(std::string_view color) const;  // throws UnknownColor

  bool adjacent(ColorIndex a, ColorIndex b) const { return adj_[a * size() + b] != 0; }
  std::vector<ColorIndex> neighborhood(ColorIndex c) const;
  /// Neither neighborhood contains the other.
  bool incomparable(ColorIndex a, ColorIndex b) const {
    return incomparable_[a * size() + b] != 0;
  }
  std::vector<std::pair<ColorIndex, ColorIndex>> edges() const;
  bool has_loops() const;
  bool is_complete_loopless() const;

  friend bool operator==(const PatternGraph&, const PatternGraph&) = default;

 private:
  void rebuild_relations();

  std::vector<std::string> colors_;
  std::vector<char> adj_;
  std::vector<char> incomparable_;
};

/// N_H(color) as color names, in color order.
std::vector<std::string> pattern_neighborhood(const PatternGraph& pattern,
                                              std::string_view color);

struct EdgeRecord {
  std::string id;
  std::string u;
  std::string v;
  std::string color;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct Edge {
  std::string id;
  VertexIndex u;
  VertexIndex v;
  ColorIndex color;
};

/// A loopless multigraph with an H-coloring. Vertex and edge indices follow
/// the natural order of their ids, so comparing indices is comparing ids.
class HColoredMultigraph {
 public:
  HColoredMultigraph() = default;

  /// Validates and indexes the graph. Throws LoopEdge, UnknownColor,
  /// DuplicateEdgeId, DuplicateVertexId or DanglingEndpoint.
  static HColoredMultigraph build(std::vector<std::string> vertices,
                                  std::vector<EdgeRecord> edges, PatternGraph pattern);

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const PatternGraph& pattern() const { return pattern_; }

  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_.at(v); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  VertexIndex vertex(std::string_view id) const;  // throws UnknownId

  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  EdgeIndex edge_index(std::string_view id) const;  // throws UnknownId

  ColorIndex color(EdgeIndex e) const { return edges_[e].color; }
  bool colors_adjacent(EdgeIndex a, EdgeIndex b) const {
    return pattern_.adjacent(edges_[a].color, edges_[b].color);
  }
  VertexIndex other_end(EdgeIndex e, VertexIndex from) const;
  bool joins(EdgeIndex e, VertexIndex a, VertexIndex b) const;

  /// E_uv, sorted; empty when u and v are not adjacent.
  std::span<const EdgeIndex> bundle(VertexIndex u, VertexIndex v) const;
  std::span<const EdgeIndex> incident(VertexIndex u) const { return incident_[u]; }
  /// N_G(u), sorted.
  std::span<const VertexIndex> neighbors(VertexIndex u) const { return neighbors_[u]; }
  std::size_t max_bundle_width() const;

  std::vector<EdgeRecord> records() const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  PatternGraph pattern_;
  std::vector<std::vector<EdgeIndex>> incident_;
  std::vector<std::vector<VertexIndex>> neighbors_;
  std::vector<std::int32_t> bundle_slot_;  // n*n, -1 when empty
  std::vector<std::vector<EdgeIndex>> bundles_;
};

struct WalkStep {
  VertexIndex from;
  std::vector<EdgeIndex> bundle;

  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

/// (v_0, bundle_0, v_1, ..., bundle_{n-1}, v_n). Closed walks keep the
/// explicit flag; their terminal is v_0.
struct DynamicHWalk {
  std::vector<WalkStep> steps;
  VertexIndex terminal = 0;
  bool closed = false;

  std::size_t length() const { return steps.size(); }
  std::size_t changes() const;
  /// v_0..v_n (v_n repeated for closed walks).
  std::vector<VertexIndex> vertices() const;

  friend bool operator==(const DynamicHWalk&, const DynamicHWalk&) = default;
};

/// Reverses step order and every bundle.
DynamicHWalk reversed(const DynamicHWalk& walk);

/// A walk spelled with ids, as read from a file.
struct WalkDescription {
  struct Step {
    std::string from;
    std::vector<std::string> edges;
  };
  std::vector<Step> steps;
  std::optional<std::string> end;
  bool closed = false;
};

/// Throws UnknownId for ids missing from the graph and MalformedWalk for
/// empty walks/bundles or an open walk whose end cannot be inferred.
DynamicHWalk resolve_walk(const HColoredMultigraph& graph, const WalkDescription& description);
WalkDescription describe_walk(const HColoredMultigraph& graph, const DynamicHWalk& walk);
/// "(v4,[e9],v5,[e14,e13],v6)"; closed walks end with the start vertex.
std::string format_walk(const HColoredMultigraph& graph, const DynamicHWalk& walk);

enum class ViolationKind {
  EdgeNotInBundle,
  ForbiddenTransition,
  NotReturning,
  ForbiddenClosingTransition,
};

struct Violation {
  ViolationKind kind;
  std::size_t step;  // for transitions: boundary between `step` and `step + 1`
  std::string message;
};

struct WalkClassification {
  bool is_dynamic_h_walk = false;
  bool is_h_walk = false;
  bool is_trail = false;
  bool is_path = false;
  bool is_cycle = false;
  bool closed = false;
  std::size_t length = 0;
  std::size_t changes = 0;
  std::size_t distinct_vertices = 0;
  std::optional<Violation> first_violation;

  /// "dynamic H-cycle", "H-path", "closed dynamic H-trail", ...
  std::string kind() const;
};

/// Full classification. Edges inside one bundle are never checked against
/// each other; the closing transition is checked only for closed walks.
/// Throws UnknownId for out-of-range indices, MalformedWalk for empty input.
WalkClassification verify_walk(const HColoredMultigraph& graph, const DynamicHWalk& walk);
WalkClassification verify_walk(const HColoredMultigraph& graph,
                               const WalkDescription& description);

}  // namespace dynwalk
