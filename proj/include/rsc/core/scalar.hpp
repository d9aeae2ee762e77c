#pragma once

#include <string>

#include "rsc/numerics/bigfloat.hpp"
#include "rsc/numerics/field_element.hpp"

namespace rsc {

enum class ScalarKind { Exact, Numeric };

/// Uniform access to the two scalar domains a cubic can live over:
/// exact FieldElement or high-precision BigComplex.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<FieldElement> {
  static constexpr ScalarKind kind = ScalarKind::Exact;
  static FieldElement from_rational(const Rational& r, const PrecisionContext&) { return FieldElement(r); }
  static bool is_zero(const FieldElement& x, const PrecisionContext&) { return x.is_zero(); }
  static bool equal(const FieldElement& x, const FieldElement& y, const PrecisionContext&) { return x == y; }
  static BigComplex to_complex(const FieldElement& x, const PrecisionContext& ctx) { return embed_complex(x, ctx); }
  static std::string to_string(const FieldElement& x) { return x.to_string(); }
};

template <>
struct ScalarTraits<BigComplex> {
  static constexpr ScalarKind kind = ScalarKind::Numeric;
  static BigComplex from_rational(const Rational& r, const PrecisionContext& ctx) { return BigComplex(r, ctx.bits()); }
  static bool is_zero(const BigComplex& x, const PrecisionContext& ctx) { return ctx.negligible(x); }
  static bool equal(const BigComplex& x, const BigComplex& y, const PrecisionContext& ctx) {
    return ctx.negligible(x - y);
  }
  static BigComplex to_complex(const BigComplex& x, const PrecisionContext&) { return x; }
  static std::string to_string(const BigComplex& x) { return x.to_string(); }
};

template <class S>
S scalar(long value, const PrecisionContext& ctx) {
  return ScalarTraits<S>::from_rational(Rational(value), ctx);
}

template <class S>
S scalar(const Rational& value, const PrecisionContext& ctx) {
  return ScalarTraits<S>::from_rational(value, ctx);
}

}  // namespace rsc
