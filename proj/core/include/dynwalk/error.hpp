#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dynwalk {

enum class ErrorKind {
  LoopEdge,
  UnknownColor,
  DuplicateEdgeId,
  DuplicateVertexId,
  DanglingEndpoint,
  UnknownId,
  SameVertex,
  MalformedWalk,
  NotMultipartite,
  PreconditionFailed,
  NotAPath,
  NotACycle,
  InternalProofViolation,
  BadParameters,
  GenerationFailed,
  BoundsExceeded,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `index` carries the offending
/// position (walk step, vertex sequence index) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace dynwalk
