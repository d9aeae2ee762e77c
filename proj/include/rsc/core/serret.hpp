#pragma once

#include "rsc/core/cubic.hpp"
#include "rsc/error.hpp"

namespace rsc {

/// Discriminant, its chosen square root, and the coefficients of the
/// order-three Moebius map m(x) = (ax + b)/(cx + d) that permutes the roots:
///   a = (sqrtD - (9R - PQ)) / (2 sqrtD)
///   b = (2Q^2 - 6PR) / (2 sqrtD)
///   c = (6Q - 2P^2) / (2 sqrtD)
///   d = 1 - a
/// with ad - bc = 1.
template <class S>
struct SerretData {
  S delta;
  S sqrt_delta;
  S a, b, c, d;
};

/// Serret quantities for an explicitly chosen square root of the discriminant.
/// Negating sqrt_delta sends a -> 1 - a and c -> -c.
template <class S>
SerretData<S> serret_from_sqrt(const Cubic<S>& f, const S& delta, const S& sqrt_delta, const PrecisionContext& ctx) {
  if (ScalarTraits<S>::is_zero(sqrt_delta, ctx))
    throw Error(ErrorCode::RepeatedRoots, "discriminant vanishes");
  const S& P = f.P;
  const S& Q = f.Q;
  const S& R = f.R;
  const S two_root = sqrt_delta * scalar<S>(2, ctx);
  S a = (sqrt_delta - (R * 9 - P * Q)) / two_root;
  S b = (Q * Q * 2 - P * R * 6) / two_root;
  S c = (Q * 6 - P * P * 2) / two_root;
  S d = scalar<S>(1, ctx) - a;
  return {delta, sqrt_delta, std::move(a), std::move(b), std::move(c), std::move(d)};
}

/// Exact Serret data. The principal square root of the discriminant is taken
/// exactly: a rational square stays rational, a rational non-square adjoins
/// the square root of its square-free kernel, and a field discriminant must
/// have a root in its own field or one more quadratic extension.
/// Throws RepeatedRoots or SqrtNotRepresentable.
SerretData<FieldElement> serret_invariants(const ExactCubic& f, const PrecisionContext& ctx);

/// Numeric Serret data using the principal complex square root.
SerretData<BigComplex> serret_invariants(const NumericCubic& f, const PrecisionContext& ctx);

}  // namespace rsc
