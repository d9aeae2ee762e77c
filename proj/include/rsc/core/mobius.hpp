#pragma once

#include <optional>

#include "rsc/core/serret.hpp"
#include "rsc/error.hpp"

namespace rsc {

/// A point of the projective line: a scalar or infinity.
template <class S>
struct Extended {
  bool infinite = false;
  S value{};

  static Extended infinity() { return {true, S{}}; }
  static Extended finite(S v) { return {false, std::move(v)}; }
};

/// Fractional-linear map x -> (ax + b)/(cx + d), ad - bc != 0.
template <class S>
struct MobiusMap {
  S a, b, c, d;

  S det() const { return a * d - b * c; }

  static MobiusMap identity(const PrecisionContext& ctx) {
    return {scalar<S>(1, ctx), scalar<S>(0, ctx), scalar<S>(0, ctx), scalar<S>(1, ctx)};
  }
  /// n(x) = 1/(1 - x), the order-three map preserving every Ramanujan simple cubic.
  static MobiusMap rsc_cycle(const PrecisionContext& ctx) {
    return {scalar<S>(0, ctx), scalar<S>(1, ctx), scalar<S>(-1, ctx), scalar<S>(1, ctx)};
  }
  /// m(x) = (ax + b)/(cx + d) from the Serret data.
  static MobiusMap from_serret(const SerretData<S>& s) { return {s.a, s.b, s.c, s.d}; }
  /// q(x) = (a - x)/c, carrying roots of the Ramanujan cubic back to the source cubic.
  static MobiusMap rsc_chart(const S& shift_a, const S& shift_c, const PrecisionContext& ctx) {
    return {scalar<S>(-1, ctx), shift_a, scalar<S>(0, ctx), shift_c};
  }
  /// q^{-1}(x) = a - c x
  static MobiusMap rsc_chart_inverse(const S& shift_a, const S& shift_c, const PrecisionContext& ctx) {
    return {-shift_c, shift_a, scalar<S>(0, ctx), scalar<S>(1, ctx)};
  }
};

/// Standard conventions: m(inf) = a/c (inf when c = 0), m(-d/c) = inf.
template <class S>
Extended<S> mobius_apply(const MobiusMap<S>& m, const Extended<S>& x, const PrecisionContext& ctx) {
  using T = ScalarTraits<S>;
  if (x.infinite) {
    if (T::is_zero(m.c, ctx)) return Extended<S>::infinity();
    return Extended<S>::finite(m.a / m.c);
  }
  S den = m.c * x.value + m.d;
  if (T::is_zero(den, ctx)) return Extended<S>::infinity();
  return Extended<S>::finite((m.a * x.value + m.b) / den);
}

/// Finite evaluation; throws PoleEvaluation at the pole.
template <class S>
S mobius_apply(const MobiusMap<S>& m, const S& x, const PrecisionContext& ctx) {
  auto r = mobius_apply(m, Extended<S>::finite(x), ctx);
  if (r.infinite) throw Error(ErrorCode::PoleEvaluation, "argument is the pole of the map");
  return r.value;
}

/// (outer o inner)(x) = outer(inner(x))
template <class S>
MobiusMap<S> mobius_compose(const MobiusMap<S>& outer, const MobiusMap<S>& inner) {
  return {outer.a * inner.a + outer.b * inner.c, outer.a * inner.b + outer.b * inner.d,
          outer.c * inner.a + outer.d * inner.c, outer.c * inner.b + outer.d * inner.d};
}

/// Identity as a map of the projective line: b = c = 0 and a = d.
template <class S>
bool mobius_is_identity(const MobiusMap<S>& m, const PrecisionContext& ctx) {
  using T = ScalarTraits<S>;
  if constexpr (T::kind == ScalarKind::Exact) {
    return m.b.is_zero() && m.c.is_zero() && m.a == m.d && !m.a.is_zero();
  } else {
    BigReal scale = abs(m.a);
    if (abs(m.d) > scale) scale = abs(m.d);
    if (scale.is_zero()) return false;
    BigReal bound = ctx.tolerance() * scale;
    return abs(m.b) < bound && abs(m.c) < bound && abs(m.a - m.d) < bound;
  }
}

/// Least k <= max_order with m^k = identity, or nullopt.
template <class S>
std::optional<int> mobius_order(const MobiusMap<S>& m, int max_order, const PrecisionContext& ctx) {
  MobiusMap<S> power = m;
  for (int k = 1; k <= max_order; ++k) {
    if (mobius_is_identity(power, ctx)) return k;
    power = mobius_compose(m, power);
  }
  return std::nullopt;
}

}  // namespace rsc
