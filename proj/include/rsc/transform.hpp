#pragma once

#include <variant>

#include "rsc/core/cubic.hpp"
#include "rsc/core/mobius.hpp"
#include "rsc/core/serret.hpp"

namespace rsc {

/// f(x) = (x - h)^3 + k
template <class S>
struct Translation {
  S h, k;
};

/// (-c)^3 f((a - x)/c) = p_B(x), B = 6a + 2cP - 3. Roots of p_B are a - c*t
/// for the roots t of f.
template <class S>
struct RamanujanShift {
  S a, c, B;
  Cubic<S> rsc;
  SerretData<S> serret;
};

template <class S>
using ShiftResult = std::variant<Translation<S>, RamanujanShift<S>>;

/// Shift computed exactly, or numerically after SqrtNotRepresentable.
using AnyShift = std::variant<ShiftResult<FieldElement>, ShiftResult<BigComplex>>;

inline bool is_numeric(const AnyShift& s) { return s.index() == 1; }

/// (-c)^3 * f((a - x)/c) expanded.
template <class S>
Poly<S> shifted_polynomial(const Cubic<S>& f, const S& a, const S& c, const PrecisionContext& ctx) {
  const S inv_c = scalar<S>(1, ctx) / c;
  const Poly<S> arg({a * inv_c, -inv_c});
  const S minus_c = -c;
  return (minus_c * minus_c * minus_c) * f.to_poly(ctx).compose(arg);
}

template <class S>
Poly<S> translation_polynomial(const Translation<S>& t, const PrecisionContext& ctx) {
  const Poly<S> lin({-t.h, scalar<S>(1, ctx)});
  return lin * lin * lin + Poly<S>({t.k});
}

/// True iff the shift identity holds: exactly for exact scalars, coefficientwise
/// within tolerance for numeric ones.
template <class S>
bool verify_shift(const Cubic<S>& f, const ShiftResult<S>& shift, const PrecisionContext& ctx) {
  if (const auto* t = std::get_if<Translation<S>>(&shift))
    return poly_equal(f.to_poly(ctx), translation_polynomial(*t, ctx), ctx);
  const auto& r = std::get<RamanujanShift<S>>(shift);
  if (ScalarTraits<S>::is_zero(r.c, ctx)) return false;
  return poly_equal(shifted_polynomial(f, r.a, r.c, ctx), rsc_from_B(r.B, ctx).to_poly(ctx), ctx);
}

/// Classify f given its Serret data: Translation when c = 0, otherwise the
/// Ramanujan shift. Throws VerificationFailed if the expansion check fails.
template <class S>
ShiftResult<S> classify_with(const Cubic<S>& f, const SerretData<S>& serret, const PrecisionContext& ctx) {
  RamanujanShift<S> r{serret.a, serret.c, serret.a * 6 + serret.c * f.P * 2 - scalar<S>(3, ctx),
                      Cubic<S>{}, serret};
  r.rsc = rsc_from_B(r.B, ctx);
  ShiftResult<S> out = r;
  if (!verify_shift(f, out, ctx)) throw Error(ErrorCode::VerificationFailed, "shifted cubic is not p_B");
  return out;
}

template <class S>
Translation<S> translation_of(const Cubic<S>& f, const PrecisionContext& ctx) {
  return {-f.P / scalar<S>(3, ctx), f.R - f.P * f.P * f.P / scalar<S>(27, ctx)};
}

/// Exact classification; throws RepeatedRoots, SqrtNotRepresentable or VerificationFailed.
ShiftResult<FieldElement> classify_and_shift_exact(const ExactCubic& f, const PrecisionContext& ctx);
/// Exact classification, retried in numeric mode when sqrt(Delta) has no exact form.
AnyShift classify_and_shift(const ExactCubic& f, const PrecisionContext& ctx);
ShiftResult<BigComplex> classify_and_shift(const NumericCubic& f, const PrecisionContext& ctx);

/// Complex embedding of every field of an exact shift.
RamanujanShift<BigComplex> to_numeric(const RamanujanShift<FieldElement>& s, const PrecisionContext& ctx);

/// a - c t
template <class S>
S to_rsc_root(const S& t, const RamanujanShift<S>& shift) {
  return shift.a - shift.c * t;
}

/// (a - x)/c
template <class S>
S from_rsc_root(const S& x, const RamanujanShift<S>& shift) {
  return (shift.a - x) / shift.c;
}

}  // namespace rsc
