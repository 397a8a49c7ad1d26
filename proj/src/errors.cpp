#include "qg/errors.hpp"

namespace qg {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotScalarMultiple: return "NotScalarMultiple";
    case ErrorCode::LambdaNotSquare: return "LambdaNotSquare";
    case ErrorCode::NeedsFieldExtension: return "NeedsFieldExtension";
    case ErrorCode::UnitCollapse: return "UnitCollapse";
    case ErrorCode::ExceedsCertifiedDegree: return "ExceedsCertifiedDegree";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::UnexpectedHomDimension: return "UnexpectedHomDimension";
    case ErrorCode::LiftFailure: return "LiftFailure";
    case ErrorCode::Io: return "IO";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

}  // namespace qg
