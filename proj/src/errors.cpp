#include "errors.hpp"

namespace simpdeg {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::None: return "None";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorCode::IncoherentOrientation: return "IncoherentOrientation";
    case ErrorCode::NonManifoldFace: return "NonManifoldFace";
    case ErrorCode::OverlapDetected: return "OverlapDetected";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::NotATriangulationOfP: return "NotATriangulationOfP";
    case ErrorCode::NotNeighboring: return "NotNeighboring";
    case ErrorCode::NotAntipodallySymmetric: return "NotAntipodallySymmetric";
    case ErrorCode::BoundaryComplementaryEdge: return "BoundaryComplementaryEdge";
    case ErrorCode::ComplementaryEdgePresent: return "ComplementaryEdgePresent";
    case ErrorCode::NonGenericPoint: return "NonGenericPoint";
    case ErrorCode::BoundaryImageViolation: return "BoundaryImageViolation";
    case ErrorCode::NotACS: return "NotACS";
    case ErrorCode::NotCentrallySymmetric: return "NotCentrallySymmetric";
    case ErrorCode::PebbleSetUnavailable: return "PebbleSetUnavailable";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::ConstraintInfeasible: return "ConstraintInfeasible";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace simpdeg
