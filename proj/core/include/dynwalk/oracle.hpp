#pragma once

// Exhaustive search on small instances. Independent of the structure,
// lifting and construction code: it only uses the walk definitions.
//
// Bundles are searched in canonical form: a bundle matters only through its
// first and last edge, so every search uses bundles of at most two edges.
// A single edge is preferred whenever one satisfies both boundaries.

#include <cstddef>
#include <optional>
#include <vector>

#include "dynwalk/model.hpp"

namespace dynwalk {

enum class OracleTarget {
  HCycleThrough,            // H-cycle through `through` with length >= min_len
  LongestDynamicCycle,
  LongestHCycle,
  HamiltonianHCycle,
  HamiltonianDynamicCycle,
  LongestHPath,
  SpanningClosedTrail,      // closed dynamic H-trail visiting every vertex
  EnumerateDynamicCycles,   // all canonical dynamic H-cycles up to max_len
};

/// State tables grow as 2^n; no bound lifts the cap above this.
inline constexpr std::size_t kOracleHardVertexCap = 20;

struct OracleBounds {
  std::size_t max_vertices = 10;
  std::size_t max_bundle_width = 4;
  /// Search nodes for trail search, walks for enumeration.
  std::size_t budget = 2'000'000;
};

struct OracleQuery {
  OracleTarget target = OracleTarget::LongestDynamicCycle;
  std::optional<VertexIndex> through;
  std::size_t min_len = 0;
  std::size_t max_len = 0;  // enumeration; 0 means no limit
  OracleBounds bounds;
};

struct OracleAnswer {
  bool exists = false;
  std::size_t value = 0;              // lengths for the longest-* targets
  std::optional<DynamicHWalk> witness;
  std::vector<DynamicHWalk> walks;    // enumeration
};

/// Throws BoundsExceeded when the graph is larger than the bounds allow or
/// the search budget runs out, UnknownId for a bad `through` vertex.
OracleAnswer oracle_solve(const HColoredMultigraph& graph, const OracleQuery& query);

}  // namespace dynwalk
