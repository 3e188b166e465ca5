#pragma once

// Structural analysis of an H-colored multigraph: auxiliary graphs G_u and
// their complete-multipartite certificates, dynamic edge sets, dynamic
// degrees, the dynamic graph G_dym and the premise report for every
// construction in theorems.hpp.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dynwalk/model.hpp"

namespace dynwalk {

/// G_u: nodes are the edges incident with `center`; two nodes are adjacent
/// iff their colors are adjacent in the pattern.
struct AuxiliaryGraph {
  VertexIndex center = 0;
  std::vector<EdgeIndex> nodes;  // sorted
  std::vector<char> adjacency;   // nodes.size() squared, row-major

  std::size_t size() const { return nodes.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adjacency[i * nodes.size() + j] != 0; }
};

AuxiliaryGraph auxiliary_graph(const HColoredMultigraph& graph, VertexIndex u);

/// Either a partition of G_u into independent parts with every cross pair
/// adjacent, or a triple (a, b, c) with a !~ b, b !~ c and a ~ c showing
/// that non-adjacency is not transitive.
class MultipartiteCertificate {
 public:
  static MultipartiteCertificate from_parts(std::vector<std::vector<EdgeIndex>> parts);
  static MultipartiteCertificate from_witness(std::array<EdgeIndex, 3> witness);

  bool is_multipartite() const { return !witness_.has_value(); }
  /// Parts ordered by their least edge; empty for an empty G_u.
  const std::vector<std::vector<EdgeIndex>>& parts() const { return parts_; }
  /// k_u; zero for a witness.
  std::size_t part_count() const { return parts_.size(); }
  const std::optional<std::array<EdgeIndex, 3>>& witness() const { return witness_; }
  /// Index into parts() of an edge incident with the center.
  std::optional<std::size_t> part_of(EdgeIndex e) const;

 private:
  std::vector<std::vector<EdgeIndex>> parts_;
  std::vector<std::pair<EdgeIndex, std::size_t>> lookup_;  // sorted by edge
  std::optional<std::array<EdgeIndex, 3>> witness_;
};

MultipartiteCertificate multipartite_certificate(const AuxiliaryGraph& aux);

/// Least pair (e, f) of E_uv whose pattern neighborhoods are incomparable.
/// Throws UnknownId for out-of-range vertices and SameVertex when u == v.
std::optional<std::pair<EdgeIndex, EdgeIndex>> dynamic_witness(const HColoredMultigraph& graph,
                                                               VertexIndex u, VertexIndex v);
bool is_dynamic_edge_set(const HColoredMultigraph& graph, VertexIndex u, VertexIndex v);

/// Least pair of E_uv with adjacent colors, i.e. two edges that sit in
/// different parts of G_u whenever G_u is complete multipartite.
std::optional<std::pair<EdgeIndex, EdgeIndex>> part_distinct_pair(const HColoredMultigraph& graph,
                                                                  VertexIndex u, VertexIndex v);

std::size_t dynamic_degree(const HColoredMultigraph& graph, VertexIndex u);

/// Simple graph on V(G) with u ~ v iff E_uv is a dynamic edge set.
class DynamicGraph {
 public:
  explicit DynamicGraph(std::size_t n = 0);

  void add_edge(VertexIndex u, VertexIndex v);

  std::size_t size() const { return neighbors_.size(); }
  bool adjacent(VertexIndex u, VertexIndex v) const { return matrix_[u * size() + v] != 0; }
  std::span<const VertexIndex> neighbors(VertexIndex u) const { return neighbors_[u]; }
  std::size_t degree(VertexIndex u) const { return neighbors_[u].size(); }
  std::size_t edge_count() const;
  std::vector<std::pair<VertexIndex, VertexIndex>> edges() const;
  bool connected() const;

 private:
  std::vector<std::vector<VertexIndex>> neighbors_;  // sorted
  std::vector<char> matrix_;
};

DynamicGraph dynamic_graph(const HColoredMultigraph& graph);

/// Whether two edges of E_uv lie in different parts of G_u. Throws
/// NotMultipartite when G_u has no partition.
bool has_part_distinct_pair(const HColoredMultigraph& graph, VertexIndex u, VertexIndex v);

/// The constructions whose premises the report decides.
enum class Goal {
  LongCycle,        // dynamic H-cycle of length >= d+1
  PathOrCycle,      // H-path >= min(2d, n) or H-cycle >= d+1
  SpanningTrail,    // spanning closed dynamic H-trail
  OreDynamic,       // hamiltonian dynamic H-cycle, degree sums >= n
  OreH,             // hamiltonian H-cycle, degree sums >= n+1
  DiracDynamic,     // hamiltonian dynamic H-cycle, degrees >= n/2
  DiracH,           // hamiltonian H-cycle, degrees >= (n+1)/2
  CompleteDynamic,  // every pair dynamic
};

/// Token used by the CLI and in reports ("cycle", "ham-h", ...).
std::string goal_token(Goal goal);
std::optional<Goal> goal_from_token(std::string_view token);
const std::vector<Goal>& all_goals();
/// Goals parameterised by a minimum dynamic degree d.
bool goal_takes_degree(Goal goal);

struct VertexReport {
  VertexIndex vertex = 0;
  MultipartiteCertificate certificate;
  std::size_t k = 0;  // parts of G_u; zero without a partition
  std::size_t dynamic_degree = 0;
};

struct HypothesisReport {
  std::size_t vertex_count = 0;
  std::vector<VertexReport> vertices;
  DynamicGraph dynamic;

  bool all_multipartite = false;
  bool all_k_at_least_2 = false;
  bool some_k_at_least_3 = false;
  bool all_k_at_least_3 = false;
  std::optional<std::size_t> min_dynamic_degree;
  bool dynamic_graph_connected = false;
  bool all_dynamic_degrees_even = false;
  /// min of δ_dym(u) + δ_dym(v) over distinct pairs with E_uv not dynamic.
  std::optional<std::size_t> min_nondynamic_pair_sum;
  std::optional<std::pair<VertexIndex, VertexIndex>> min_nondynamic_pair;
  /// Every bundle is dynamic exactly when it holds two edges of adjacent
  /// colors. Holds for loopless complete multipartite patterns.
  bool dynamic_matches_adjacent_pairs = true;

  struct Applicable {
    Goal goal;
    std::optional<std::size_t> d;
  };
  std::vector<Applicable> applicable;
  /// Hamiltonian H-path premises (sums >= n-1, sums >= n+1); reported only,
  /// no construction exists for them.
  bool hamiltonian_path_premise = false;
  bool hamiltonian_connected_premise = false;

  bool applies(Goal goal) const;
};

HypothesisReport hypothesis_report(const HColoredMultigraph& graph);

/// Why `goal` is not applicable with degree bound `d`, or nullopt when all
/// premises hold. Goals without a degree ignore `d`.
std::optional<std::string> premise_failure(const HColoredMultigraph& graph,
                                           const HypothesisReport& report, Goal goal,
                                           std::size_t d = 0);

}  // namespace dynwalk
