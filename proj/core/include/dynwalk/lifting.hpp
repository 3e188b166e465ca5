#pragma once

// Lifting vertex walks whose consecutive pairs are dynamic edge sets into
// H-walks by a single greedy pass, closing with at most one change.

#include <optional>
#include <span>
#include <vector>

#include "dynwalk/model.hpp"
#include "dynwalk/structure.hpp"

namespace dynwalk {

/// Greedy step machinery shared by the free lift functions and the
/// constructions in theorems.hpp. Caches G_u certificates; not thread-safe.
class Lifter {
 public:
  explicit Lifter(const HColoredMultigraph& graph);

  const HColoredMultigraph& graph() const { return graph_; }

  /// Certificate of G_u, computed on first use.
  const MultipartiteCertificate& certificate(VertexIndex u) const;

  /// The part-distinct pair (f1, f2) of E_uv used by every greedy step.
  /// Throws PreconditionFailed (with `index`) when E_uv is not dynamic,
  /// has no pair of adjacent colors, or G_u is not complete multipartite
  /// with k_u >= 2.
  std::pair<EdgeIndex, EdgeIndex> witness_pair(VertexIndex u, VertexIndex v,
                                               std::size_t index) const;

  /// e in E_uv adjacent to `prev` at u: f1 if it works, else f2.
  EdgeIndex next_edge(VertexIndex u, VertexIndex v, EdgeIndex prev, std::size_t index) const;

  /// Appends greedy singleton steps along `seq`; seq.front() must be the
  /// current end of `walk`, which must be open and nonempty.
  void extend(DynamicHWalk& walk, std::span<const VertexIndex> seq) const;

  /// Closes an open walk back to its start through E_{end,start}: one edge
  /// when it meets both neighbors, else two from different parts.
  void close(DynamicHWalk& walk) const;

 private:
  void require_vertex(VertexIndex u, std::size_t index) const;

  const HColoredMultigraph& graph_;
  mutable std::vector<std::optional<MultipartiteCertificate>> certificates_;
};

/// H-walk (all bundles singletons) on exactly x_0..x_n. `start` fixes e_0,
/// otherwise the least edge of E_{x_0 x_1}.
DynamicHWalk lift_walk(const HColoredMultigraph& graph, std::span<const VertexIndex> seq,
                       std::optional<EdgeIndex> start = std::nullopt);

/// Closed dynamic H-walk on the cyclic sequence x_0..x_n, returning through
/// E_{x_n x_0}; at most one change, always in the final bundle.
DynamicHWalk lift_closed(const HColoredMultigraph& graph, std::span<const VertexIndex> seq,
                         std::optional<EdgeIndex> start = std::nullopt);

/// As lift_walk; throws NotAPath when a vertex repeats.
DynamicHWalk lift_path(const HColoredMultigraph& graph, std::span<const VertexIndex> path,
                       std::optional<EdgeIndex> start = std::nullopt);

/// As lift_closed on a cycle x_0..x_{n-1} of G_dym (n >= 2, no vertex
/// listed twice); throws NotACycle otherwise.
DynamicHWalk lift_cycle(const HColoredMultigraph& graph, std::span<const VertexIndex> cycle,
                        std::optional<EdgeIndex> start = std::nullopt);

}  // namespace dynwalk
