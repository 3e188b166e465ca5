#pragma once

// Constructions producing the long cycles, paths, closed trails and
// hamiltonian cycles guaranteed under dynamic-degree conditions. Every
// result is checked with verify_walk before it is returned.

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "dynwalk/model.hpp"
#include "dynwalk/structure.hpp"

namespace dynwalk {

enum class ResultKind { DynamicHCycle, HCycle, HPath, SpanningClosedTrail };

std::string to_string(ResultKind kind);

struct ConstructionResult {
  DynamicHWalk walk;
  Goal goal = Goal::LongCycle;
  std::size_t guaranteed_length = 0;
  std::size_t max_changes = 0;
  ResultKind kind = ResultKind::DynamicHCycle;
  /// Which branch of the construction produced the walk.
  std::string strategy;
};

/// Why `result` breaks its own promise (kind, length, changes), or nullopt.
std::optional<std::string> check_result(const HColoredMultigraph& graph,
                                        const ConstructionResult& result);

/// Greedy two-ended growth in G_dym from `seed` (a path): extend the head
/// with its least unused neighbor, else the tail, until both ends are stuck.
std::vector<VertexIndex> grow_dynamic_path(const DynamicGraph& dyn, std::deque<VertexIndex> seed);

/// Dynamic H-cycle of length >= d+1 with at most one change.
ConstructionResult long_dynamic_cycle(const HColoredMultigraph& graph, std::size_t d);

/// H-path of length >= min(2d, n) or H-cycle of length >= d+1. Needs
/// k_u >= 3 at every vertex.
ConstructionResult path_or_cycle(const HColoredMultigraph& graph, std::size_t d);

/// Closed dynamic H-trail through every vertex with at most one change.
ConstructionResult spanning_closed_trail(const HColoredMultigraph& graph);

/// Hamiltonian dynamic H-cycle, at most one change (degree sums >= n).
ConstructionResult ore_hamiltonian_dynamic_cycle(const HColoredMultigraph& graph);

/// Hamiltonian H-cycle (degree sums >= n+1, some k_u >= 3).
ConstructionResult ore_hamiltonian_h_cycle(const HColoredMultigraph& graph);

ConstructionResult dirac_dynamic(const HColoredMultigraph& graph);
ConstructionResult dirac_h(const HColoredMultigraph& graph);

/// Dispatch by goal; `d` is used by the goals that take a degree.
ConstructionResult construct(const HColoredMultigraph& graph, Goal goal, std::size_t d = 0);

/// Hamiltonian cycle of a simple graph by crossing-pair exchanges, starting
/// from `order`. Returns nullopt when an exchange cannot be found.
std::optional<std::vector<VertexIndex>> exchange_hamiltonian_cycle(const DynamicGraph& dyn,
                                                                   std::vector<VertexIndex> order);

/// Closed trail through every edge of a connected simple graph with even
/// degrees, starting at `start`; the start vertex is not repeated at the end.
std::vector<VertexIndex> euler_circuit(const DynamicGraph& dyn, VertexIndex start);

}  // namespace dynwalk
