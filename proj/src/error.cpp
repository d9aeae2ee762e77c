#include "rsc/error.hpp"

namespace rsc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonRealElement: return "NonRealElement";
    case ErrorCode::RepeatedRoots: return "RepeatedRoots";
    case ErrorCode::SqrtNotRepresentable: return "SqrtNotRepresentable";
    case ErrorCode::PoleEvaluation: return "PoleEvaluation";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::TranslationCase: return "TranslationCase";
    case ErrorCode::NonRealShift: return "NonRealShift";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NoBranchFound: return "NoBranchFound";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace rsc
