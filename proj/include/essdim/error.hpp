#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace essdim {

enum class ErrorCode {
  NotNormal,
  NotAbelian,
  OrderCapExceeded,
  InvalidArgument,
  HypothesisFailed,
  ReductionFailed,
  NotASquare,
  NotExtendable,
  IndexOutOfRange,
  OddSubset,
  NotInI1,
  NotInI2,
  BadCharacteristic,
  BadDimension,
  EvenPrime,
  NoRootOfUnity,
  AbelianInput,
  EmptyIntersection,
  ParseError,
  InconsistentProfile,
  UnknownSuite,
  InternalError,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; the code tells callers (and the CLI
// exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace essdim
