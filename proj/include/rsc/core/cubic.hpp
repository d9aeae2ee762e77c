#pragma once

#include <optional>
#include <string>

#include "rsc/core/poly.hpp"
#include "rsc/core/scalar.hpp"

namespace rsc {

/// Monic cubic x^3 + P x^2 + Q x + R. The leading 1 is implicit; exact and
/// numeric scalars never mix within one cubic (enforced by the type).
template <class S>
struct Cubic {
  S P, Q, R;

  Poly<S> to_poly(const PrecisionContext& ctx) const { return Poly<S>({R, Q, P, scalar<S>(1, ctx)}); }

  S eval(const S& x) const { return ((x + P) * x + Q) * x + R; }

  S derivative(const S& x) const { return (x * 3 + P * 2) * x + Q; }
  friend bool operator==(const Cubic&, const Cubic&) = default;
};

using ExactCubic = Cubic<FieldElement>;
using NumericCubic = Cubic<BigComplex>;

inline FieldElement operator*(const FieldElement& a, long b) { return a * FieldElement(b); }
inline FieldElement operator*(long b, const FieldElement& a) { return a * FieldElement(b); }

/// Delta = P^2Q^2 - 4Q^3 - 4P^3R + 18PQR - 27R^2
template <class S>
S discriminant(const Cubic<S>& f) {
  const S& P = f.P;
  const S& Q = f.Q;
  const S& R = f.R;
  return P * P * Q * Q - Q * Q * Q * 4 - P * P * P * R * 4 + P * Q * R * 18 - R * R * 27;
}

NumericCubic to_numeric(const ExactCubic& f, const PrecisionContext& ctx);

/// Max coefficient modulus including the leading 1.
BigReal coefficient_norm(const NumericCubic& f);

/// "x^3 + P*x^2 + Q*x + R" in plain text with exact or decimal coefficients.
std::string to_string(const ExactCubic& f);
std::string to_string(const NumericCubic& f);
std::string to_latex(const ExactCubic& f);

/// p_B(x) = x^3 - ((3+B)/2) x^2 - ((3-B)/2) x + 1
template <class S>
Cubic<S> rsc_from_B(const S& B, const PrecisionContext& ctx) {
  const S half = scalar<S>(Rational(1, 2), ctx);
  const S three = scalar<S>(3, ctx);
  return Cubic<S>{-(three + B) * half, -(three - B) * half, scalar<S>(1, ctx)};
}

/// B when f = p_B (R = 1 and P + Q = -3, then B = -2P - 3), else nullopt.
template <class S>
std::optional<S> rsc_detect(const Cubic<S>& f, const PrecisionContext& ctx) {
  using T = ScalarTraits<S>;
  if (!T::equal(f.R, scalar<S>(1, ctx), ctx)) return std::nullopt;
  if (!T::equal(f.P + f.Q, scalar<S>(-3, ctx), ctx)) return std::nullopt;
  return -(f.P * 2) - scalar<S>(3, ctx);
}

}  // namespace rsc
