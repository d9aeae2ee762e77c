#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rsc {

enum class ErrorCode {
  DivisionByZero,
  FieldTooLarge,
  Overflow,
  NonRealElement,
  RepeatedRoots,
  SqrtNotRepresentable,
  PoleEvaluation,
  VerificationFailed,
  TranslationCase,
  NonRealShift,
  NonConvergence,
  NotAPermutation,
  NoBranchFound,
  PrecisionTooLow,
  UnsupportedDegree,
  ParseError,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Every domain failure in the library is reported as an rsc::Error carrying
/// a machine-readable code; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures additionally record the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rsc
