// Error classification shared by the C++ core, the C API and the CLI.
#pragma once

#include <stdexcept>
#include <string>

namespace simpdeg {

enum class ErrorCode {
  None = 0,
  // input handling
  Parse,
  Validation,
  Io,
  InvalidArgument,
  // complex construction / geometry
  DegenerateSimplex,
  IncoherentOrientation,
  NonManifoldFace,
  OverlapDetected,
  InvalidPolygon,
  NotATriangulationOfP,
  // hypothesis / precondition failures
  NotNeighboring,
  NotAntipodallySymmetric,
  BoundaryComplementaryEdge,
  ComplementaryEdgePresent,
  NonGenericPoint,
  BoundaryImageViolation,
  NotACS,
  NotCentrallySymmetric,
  PebbleSetUnavailable,
  // bounded searches
  SearchExhausted,
  SpaceTooLarge,
  ConstraintInfeasible,
  // bugs
  InternalInconsistency,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace simpdeg
