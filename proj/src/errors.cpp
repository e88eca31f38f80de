#include "qknot/errors.hpp"

namespace qknot {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OddExponent: return "OddExponent";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::DivisionFailed: return "DivisionFailed";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::UnknownKnot: return "UnknownKnot";
    case ErrorCode::OddAlphaExponent: return "OddAlphaExponent";
    case ErrorCode::NonzeroAlphaSquareCounter: return "NonzeroAlphaSquareCounter";
    case ErrorCode::MismatchBeyondPrecision: return "MismatchBeyondPrecision";
    case ErrorCode::CongruenceFailure: return "CongruenceFailure";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace qknot
