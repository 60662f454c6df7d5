#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glued {

enum class ErrorKind {
  Coplanar,
  OffPlane,
  Degenerate,
  NotDisjoint,
  PreconditionViolated,
  NotATree,
  UnexpectedIntersection,
  MissingGluePoint,
  InternalInconsistency,
  PerturbationTooLarge,
  NonGenericDirection,
  MaxRetriesExceeded,
  NonGenericProjection,
  TooManyCrossings,
  SingularPresentation,
  ParseError,
  InvalidArgument,
};

std::string_view error_name(ErrorKind kind);

// All library failures are reported through this type; kind() is the
// machine-readable tag the CLI prints.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace glued
