#include "dynwalk/lifting.hpp"

#include <algorithm>
#include <set>

#include "dynwalk/error.hpp"

namespace dynwalk {

namespace {

std::string step_label(std::size_t index) { return "step " + std::to_string(index); }

}  // namespace

Lifter::Lifter(const HColoredMultigraph& graph)
    : graph_(graph), certificates_(graph.vertex_count()) {}

const MultipartiteCertificate& Lifter::certificate(VertexIndex u) const {
  auto& slot = certificates_.at(u);
  if (!slot) slot = multipartite_certificate(auxiliary_graph(graph_, u));
  return *slot;
}

void Lifter::require_vertex(VertexIndex u, std::size_t index) const {
  const auto& cert = certificate(u);
  if (!cert.is_multipartite()) {
    throw Error(ErrorKind::PreconditionFailed,
                "G_u at '" + graph_.vertex_id(u) + "' is not complete multipartite", index);
  }
  if (cert.part_count() < 2) {
    throw Error(ErrorKind::PreconditionFailed,
                "G_u at '" + graph_.vertex_id(u) + "' has k_u = " +
                    std::to_string(cert.part_count()) + " < 2",
                index);
  }
}

std::pair<EdgeIndex, EdgeIndex> Lifter::witness_pair(VertexIndex u, VertexIndex v,
                                                     std::size_t index) const {
  if (u >= graph_.vertex_count() || v >= graph_.vertex_count()) {
    throw Error(ErrorKind::UnknownId, step_label(index) + " uses an unknown vertex", index);
  }
  if (u == v) {
    throw Error(ErrorKind::PreconditionFailed,
                step_label(index) + " stays at '" + graph_.vertex_id(u) + "'", index);
  }
  const std::string pair = "'" + graph_.vertex_id(u) + "', '" + graph_.vertex_id(v) + "'";
  if (graph_.bundle(u, v).empty()) {
    throw Error(ErrorKind::PreconditionFailed, step_label(index) + ": " + pair + " are not adjacent",
                index);
  }
  if (!is_dynamic_edge_set(graph_, u, v)) {
    throw Error(ErrorKind::PreconditionFailed,
                step_label(index) + ": E_uv for " + pair + " is not a dynamic edge set", index);
  }
  require_vertex(u, index);
  require_vertex(v, index);
  const auto witness = part_distinct_pair(graph_, u, v);
  if (!witness) {
    throw Error(ErrorKind::PreconditionFailed,
                step_label(index) + ": E_uv for " + pair +
                    " is dynamic but has no two edges of adjacent colors",
                index);
  }
  return *witness;
}

EdgeIndex Lifter::next_edge(VertexIndex u, VertexIndex v, EdgeIndex prev, std::size_t index) const {
  const auto [f1, f2] = witness_pair(u, v, index);
  if (graph_.colors_adjacent(prev, f1)) return f1;
  if (graph_.colors_adjacent(prev, f2)) return f2;
  throw Error(ErrorKind::PreconditionFailed,
              step_label(index) + ": no edge of E_uv continues from '" + graph_.edge(prev).id + "'",
              index);
}

void Lifter::extend(DynamicHWalk& walk, std::span<const VertexIndex> seq) const {
  if (walk.steps.empty() || walk.closed) {
    throw Error(ErrorKind::MalformedWalk, "can only extend a nonempty open walk");
  }
  if (seq.empty() || seq.front() != walk.terminal) {
    throw Error(ErrorKind::MalformedWalk, "extension does not start at the end of the walk");
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const std::size_t index = walk.steps.size();
    const EdgeIndex prev = walk.steps.back().bundle.back();
    const EdgeIndex e = next_edge(seq[i], seq[i + 1], prev, index);
    walk.steps.push_back({seq[i], {e}});
    walk.terminal = seq[i + 1];
  }
}

void Lifter::close(DynamicHWalk& walk) const {
  if (walk.steps.empty() || walk.closed) {
    throw Error(ErrorKind::MalformedWalk, "can only close a nonempty open walk");
  }
  const VertexIndex start = walk.steps.front().from;
  const VertexIndex end = walk.terminal;
  const std::size_t index = walk.steps.size();
  const EdgeIndex first = walk.steps.front().bundle.front();
  const EdgeIndex e = next_edge(end, start, walk.steps.back().bundle.back(), index);
  WalkStep step{end, {e}};
  if (!graph_.colors_adjacent(e, first)) {
    // e and the first edge share a part of G_{start}; one of f1, f2 sits
    // in another part and therefore meets the first edge.
    const auto [f1, f2] = witness_pair(end, start, index);
    const EdgeIndex second = graph_.colors_adjacent(f1, first) ? f1 : f2;
    if (!graph_.colors_adjacent(second, first)) {
      throw Error(ErrorKind::PreconditionFailed,
                  "closing " + step_label(index) + ": no edge of E_uv meets '" +
                      graph_.edge(first).id + "'",
                  index);
    }
    step.bundle.push_back(second);
  }
  walk.steps.push_back(std::move(step));
  walk.terminal = start;
  walk.closed = true;
}

DynamicHWalk lift_walk(const HColoredMultigraph& graph, std::span<const VertexIndex> seq,
                       std::optional<EdgeIndex> start) {
  if (seq.size() < 2) {
    throw Error(ErrorKind::MalformedWalk, "a lifted walk needs at least two vertices");
  }
  Lifter lifter(graph);
  lifter.witness_pair(seq[0], seq[1], 0);
  const auto first_bundle = graph.bundle(seq[0], seq[1]);
  EdgeIndex e0 = first_bundle.front();
  if (start) {
    if (std::find(first_bundle.begin(), first_bundle.end(), *start) == first_bundle.end()) {
      throw Error(ErrorKind::BadParameters, "start edge does not join the first two vertices", 0);
    }
    e0 = *start;
  }
  DynamicHWalk walk;
  walk.steps.push_back({seq[0], {e0}});
  walk.terminal = seq[1];
  lifter.extend(walk, seq.subspan(1));
  return walk;
}

DynamicHWalk lift_closed(const HColoredMultigraph& graph, std::span<const VertexIndex> seq,
                         std::optional<EdgeIndex> start) {
  if (seq.size() < 2) {
    throw Error(ErrorKind::MalformedWalk, "a closed lift needs at least two vertices");
  }
  DynamicHWalk walk = lift_walk(graph, seq, start);
  Lifter(graph).close(walk);
  return walk;
}

namespace {

bool all_distinct(std::span<const VertexIndex> seq) {
  return std::set<VertexIndex>(seq.begin(), seq.end()).size() == seq.size();
}

}  // namespace

DynamicHWalk lift_path(const HColoredMultigraph& graph, std::span<const VertexIndex> path,
                       std::optional<EdgeIndex> start) {
  if (!all_distinct(path)) throw Error(ErrorKind::NotAPath, "a vertex repeats");
  return lift_walk(graph, path, start);
}

DynamicHWalk lift_cycle(const HColoredMultigraph& graph, std::span<const VertexIndex> cycle,
                        std::optional<EdgeIndex> start) {
  if (cycle.size() < 2) throw Error(ErrorKind::NotACycle, "a cycle needs at least two vertices");
  if (!all_distinct(cycle)) throw Error(ErrorKind::NotACycle, "a vertex repeats");
  return lift_closed(graph, cycle, start);
}

}  // namespace dynwalk
