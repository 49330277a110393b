#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

enum class ErrorCode {
  InvalidColorLetter,
  InvalidArity,
  InvalidDifference,
  InvalidLength,
  InvalidPermutation,
  NotInvertible,
  UnsupportedTopology,
  TooSmall,
  VariantMismatch,
  UnsupportedArity,
  InvalidRepeat,
  NotDivisible,
  UnknownSuite,
  InvalidParams,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Every contract violation in the library surfaces as this exception; the
// code lets callers (the CLI in particular) map failures without string
// matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rainbow
