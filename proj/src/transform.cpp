#include "rsc/transform.hpp"

namespace rsc {

namespace {

template <class S>
ShiftResult<S> translation_checked(const Cubic<S>& f, const PrecisionContext& ctx) {
  ShiftResult<S> t = translation_of(f, ctx);
  if (!verify_shift(f, t, ctx)) throw Error(ErrorCode::VerificationFailed, "translation expansion mismatch");
  return t;
}

}  // namespace

ShiftResult<FieldElement> classify_and_shift_exact(const ExactCubic& f, const PrecisionContext& ctx) {
  if (discriminant(f).is_zero()) throw Error(ErrorCode::RepeatedRoots, to_string(f) + " has a repeated root");
  if ((f.Q * 6 - f.P * f.P * 2).is_zero()) return translation_checked(f, ctx);
  return classify_with(f, serret_invariants(f, ctx), ctx);
}

AnyShift classify_and_shift(const ExactCubic& f, const PrecisionContext& ctx) {
  try {
    return classify_and_shift_exact(f, ctx);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SqrtNotRepresentable) throw;
  }
  return classify_and_shift(to_numeric(f, ctx), ctx);
}

ShiftResult<BigComplex> classify_and_shift(const NumericCubic& f, const PrecisionContext& ctx) {
  if (ctx.negligible(discriminant(f))) throw Error(ErrorCode::RepeatedRoots, "cubic has a repeated root");
  if (ctx.negligible(f.Q * 6 - f.P * f.P * 2)) return translation_checked(f, ctx);
  return classify_with(f, serret_invariants(f, ctx), ctx);
}

RamanujanShift<BigComplex> to_numeric(const RamanujanShift<FieldElement>& s, const PrecisionContext& ctx) {
  auto e = [&](const FieldElement& x) { return embed_complex(x, ctx); };
  SerretData<BigComplex> serret{e(s.serret.delta), e(s.serret.sqrt_delta), e(s.serret.a),
                                e(s.serret.b),     e(s.serret.c),          e(s.serret.d)};
  return {e(s.a), e(s.c), e(s.B), to_numeric(s.rsc, ctx), std::move(serret)};
}

}  // namespace rsc
