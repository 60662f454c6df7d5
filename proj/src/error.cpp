#include "glued/error.hpp"

namespace glued {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Coplanar: return "Coplanar";
    case ErrorKind::OffPlane: return "OffPlane";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::UnexpectedIntersection: return "UnexpectedIntersection";
    case ErrorKind::MissingGluePoint: return "MissingGluePoint";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::PerturbationTooLarge: return "PerturbationTooLarge";
    case ErrorKind::NonGenericDirection: return "NonGenericDirection";
    case ErrorKind::MaxRetriesExceeded: return "MaxRetriesExceeded";
    case ErrorKind::NonGenericProjection: return "NonGenericProjection";
    case ErrorKind::TooManyCrossings: return "TooManyCrossings";
    case ErrorKind::SingularPresentation: return "SingularPresentation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace glued
