#include "dynwalk/error.hpp"

namespace dynwalk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::UnknownColor: return "UnknownColor";
    case ErrorKind::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorKind::DuplicateVertexId: return "DuplicateVertexId";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::SameVertex: return "SameVertex";
    case ErrorKind::MalformedWalk: return "MalformedWalk";
    case ErrorKind::NotMultipartite: return "NotMultipartite";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::InternalProofViolation: return "InternalProofViolation";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::BoundsExceeded: return "BoundsExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      index_(index) {}

}  // namespace dynwalk
