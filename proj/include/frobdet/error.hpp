#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobdet {

enum class ErrorCode {
  InvalidArgument,
  ZeroInverse,
  VarMismatch,
  DegreeMismatch,
  ParseError,
  NotHomogeneous,
  ZeroModP,
  NotACurve,
  GenusZero,
  NonInjectivePower,
  NoStabilization,
  NotSquare,
  FreenessCheckFailed,
  SizeCap,
  NotSkew,
  OddSize,
  DegenerateSamples,
  Mismatch,
  DegreeIncompatible,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to a verdict or exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace frobdet
