#pragma once

// c-edge-colored multigraphs: normalization, the adapter to the complete
// loopless pattern, per-color degrees and properly colored hamiltonian
// cycles.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dynwalk/model.hpp"
#include "dynwalk/structure.hpp"
#include "dynwalk/theorems.hpp"

namespace dynwalk {

struct ColoredEdge {
  std::string id;
  std::string u;
  std::string v;
  std::size_t color = 1;  // 1..c

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

struct EdgeColoredMultigraph {
  std::vector<std::string> vertices;
  std::vector<ColoredEdge> edges;
  std::size_t colors = 0;  // c
};

struct Normalized {
  EdgeColoredMultigraph graph;
  std::vector<std::string> dropped;  // ids of removed same-colored parallels
};

/// Keeps the least id among parallel edges of equal color.
Normalized normalize(const EdgeColoredMultigraph& raw);

/// H-colored view under the complete loopless pattern on "1".."c". Throws
/// the build errors of HColoredMultigraph, UnknownColor for colors outside
/// 1..c.
HColoredMultigraph to_h_colored(const EdgeColoredMultigraph& ecm);

/// δ_i(x): neighbors joined to x by an edge of color i.
std::size_t color_degree(const EdgeColoredMultigraph& ecm, std::string_view x, std::size_t i);

struct PcResult {
  HColoredMultigraph adapter;
  ConstructionResult construction;
  std::vector<std::string> dropped;
};

/// PC hamiltonian cycle when c >= 3, |E_uv| <= c-1 and δ_i(x) >= n/2 for
/// every x and i. Asserts 2·δ_dym(x) >= n+1 on the adapter (throws
/// InternalProofViolation otherwise) before building the cycle.
PcResult pc_hamiltonian(const EdgeColoredMultigraph& ecm);

/// Why pc_hamiltonian's premises fail on a normalized graph, or nullopt.
std::optional<std::string> pc_premise_failure(const EdgeColoredMultigraph& normalized);

struct PcCorollaryReport {
  HypothesisReport report;
  bool every_vertex_two_colors = false;
  bool some_vertex_three_colors = false;
  /// min of δ_dym(x) + δ_dym(y) over all distinct pairs.
  std::optional<std::size_t> min_pair_sum;
  bool ore_premise = false;    // two colors everywhere, three somewhere, sums >= n+1
  bool dirac_premise = false;  // two colors everywhere, three somewhere, 2δ_dym >= n+1
  bool bundle_premise = false; // pc_hamiltonian premises
};

PcCorollaryReport pc_corollary_checks(const EdgeColoredMultigraph& ecm);

/// Hamiltonian PC cycle through whichever corollary applies, else nullopt.
std::optional<PcResult> pc_corollary_cycle(const EdgeColoredMultigraph& ecm);

/// Searches random instances that meet every premise of pc_hamiltonian
/// except the bundle bound (some |E_uv| = c) for one without a PC
/// hamiltonian cycle, using the oracle.
struct ConjectureScan {
  std::size_t checked = 0;
  std::optional<EdgeColoredMultigraph> counterexample;
};
ConjectureScan scan_bundle_bound(std::size_t n, std::size_t colors, std::size_t samples,
                                 std::uint64_t seed);

}  // namespace dynwalk
