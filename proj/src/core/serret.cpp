#include "rsc/core/serret.hpp"

namespace rsc {

SerretData<FieldElement> serret_invariants(const ExactCubic& f, const PrecisionContext& ctx) {
  const FieldElement delta = discriminant(f);
  if (delta.is_zero()) throw Error(ErrorCode::RepeatedRoots, "discriminant of " + to_string(f) + " is zero");
  std::optional<FieldElement> root;
  try {
    root = exact_sqrt(delta, true);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow && e.code() != ErrorCode::FieldTooLarge) throw;
  }
  if (!root)
    throw Error(ErrorCode::SqrtNotRepresentable, "sqrt(" + delta.to_string() + ") has no exact multi-quadratic form");
  try {
    return serret_from_sqrt(f, delta, *root, ctx);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::FieldTooLarge || e.code() == ErrorCode::Overflow)
      throw Error(ErrorCode::SqrtNotRepresentable, "sqrt(" + delta.to_string() + ") leaves the supported fields");
    throw;
  }
}

SerretData<BigComplex> serret_invariants(const NumericCubic& f, const PrecisionContext& ctx) {
  const BigComplex delta = discriminant(f);
  if (ctx.negligible(delta)) throw Error(ErrorCode::RepeatedRoots, "discriminant is numerically zero");
  return serret_from_sqrt(f, delta, principal_sqrt(delta), ctx);
}

}  // namespace rsc
