#pragma once

#include <stdexcept>
#include <string>

namespace qknot {

enum class ErrorCode {
  ParseError,
  InvalidArgument,
  OddExponent,
  NotPrimePower,
  DivisionFailed,
  NotAUnit,
  NotAKnot,
  UnknownKnot,
  OddAlphaExponent,
  NonzeroAlphaSquareCounter,
  MismatchBeyondPrecision,
  CongruenceFailure,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qknot
