#pragma once

#include <stdexcept>
#include <string>

namespace qg {

enum class ErrorCode {
  NotSquare,
  NotInvertible,
  NotScalarMultiple,
  LambdaNotSquare,
  NeedsFieldExtension,
  UnitCollapse,
  ExceedsCertifiedDegree,
  CacheCorrupt,
  VersionMismatch,
  ConfigInvalid,
  UnexpectedHomDimension,
  LiftFailure,
  Io,
  InvalidArgument,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qg
