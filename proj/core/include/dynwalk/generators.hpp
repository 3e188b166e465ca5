#pragma once

// Instance generators: the glued complete families, complete multigraphs
// with distinctly colored parallel edges, and seeded random instances that
// satisfy the premises of a chosen construction.

#include <cstddef>
#include <cstdint>

#include "dynwalk/model.hpp"
#include "dynwalk/structure.hpp"

namespace dynwalk {

/// Two copies of K_n sharing one vertex (v1..v{2n-1}, shared v{n}); every
/// pair carries m edges of pairwise distinct colors. The pattern must be
/// complete and loopless with at least m colors. Throws BadParameters.
HColoredMultigraph gen_glued_complete(std::size_t n, std::size_t m, const PatternGraph& pattern);
/// Same with the complete pattern on m colors.
HColoredMultigraph gen_glued_complete(std::size_t n, std::size_t m);

/// K_n with m distinctly colored parallel edges per pair under the complete
/// pattern on `colors` >= m colors.
HColoredMultigraph gen_complete_multigraph(std::size_t n, std::size_t m, std::size_t colors);

/// Random instance satisfying the premises of `profile` (with degree bound
/// `d` where the goal takes one). The pattern is a random loopless complete
/// multipartite graph. Reproducible from `seed`; throws GenerationFailed
/// when no instance is found within a bounded number of attempts.
HColoredMultigraph gen_random(std::size_t n, std::uint64_t seed, Goal profile, std::size_t d = 2);

}  // namespace dynwalk
