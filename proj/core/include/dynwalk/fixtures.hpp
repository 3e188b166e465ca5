#pragma once

// Small named instances used by tests, benchmarks and `dynwalk gen`.

#include <cstddef>

#include "dynwalk/model.hpp"
#include "dynwalk/pc.hpp"

namespace dynwalk::fixtures {

/// Seven vertices, sixteen edges, pattern B-R-G (colors B,R,G; edges B-R,
/// G-R). Its dynamic graph has edges v1v4, v2v3, v3v4, v4v7, v5v6.
HColoredMultigraph sample();

/// P = (v4,[e9],v5,[e14,e13],v6,[e16],v7,[e11,e12],v4) on sample().
WalkDescription sample_cycle();
/// T = (v1,[e4],v4,[e10],v5,[e14,e13],v6,[e15],v7) on sample().
WalkDescription sample_trail();

/// Triangle a, b, c with every pair doubled (ids ab1/ab2, ...), colors 1
/// and 2, pattern K_2.
HColoredMultigraph doubled_triangle();

/// Cycle v1..v{len} with doubled edges colored 1 and 2, pattern K_2.
HColoredMultigraph doubled_cycle(std::size_t len);

/// Path v1..v{n} with doubled edges colored 1 and 2, pattern K_2.
HColoredMultigraph doubled_path(std::size_t n);

/// Two doubled triangles sharing v3, pattern K_2.
HColoredMultigraph bowtie();

/// K_4 whose pairs carry colors {2,3}, {1,3} or {1,2} by perfect matching;
/// every color degree is 2 and every bundle has c-1 = 2 edges.
EdgeColoredMultigraph pc_k4();

/// Loopless pattern where E_{w1 w4} is a dynamic edge set without two edges
/// of adjacent colors, although every G_u is complete multipartite with
/// k_u >= 2.
HColoredMultigraph dynamic_without_adjacent_pair();

}  // namespace dynwalk::fixtures
