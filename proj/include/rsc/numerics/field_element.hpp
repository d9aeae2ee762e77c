#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rsc/numerics/bigfloat.hpp"
#include "rsc/numerics/rational.hpp"

namespace rsc {

/// A square-free integer k != 0 naming the basis element sqrt(k) of a
/// multi-quadratic field. Key 1 is the rational unit. Negative keys are
/// imaginary: sqrt(k) = i*sqrt(|k|).
using SqrtKey = std::int64_t;

/// Exact element of Q or of Q(sqrt(d1), sqrt(d2)).
///
/// Stored as a sum of rational multiples of sqrt(k) over distinct square-free
/// keys k. The field an element lives in is the one spanned by its nonzero
/// keys (at most rank 2 modulo squares); gens() reports a canonical pair of
/// generators for it. Arithmetic merges fields and throws FieldTooLarge when
/// the merged field would need three generators.
///
/// sqrt(s)*sqrt(t) = g*sqrt(st/g^2) with g = gcd(|s|,|t|), negated when both
/// s and t are negative (principal branches throughout).
class FieldElement {
 public:
  struct Term {
    SqrtKey key;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  FieldElement() = default;
  FieldElement(long value);              // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& value);   // NOLINT(google-explicit-constructor)

  /// sqrt(n) rewritten as g*sqrt(kernel); n may be negative.
  static FieldElement sqrt_of(const mpz_class& n);
  static FieldElement sqrt_of(long n) { return sqrt_of(mpz_class(n)); }
  /// sqrt(p/q) = sqrt(pq)/q.
  static FieldElement sqrt_of(const Rational& r);
  static FieldElement from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  Rational coeff(SqrtKey key) const;
  /// Canonical generators (0, 1 or 2 of them) of the field spanned by the keys.
  std::vector<SqrtKey> gens() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// No imaginary keys.
  bool is_real() const;
  /// Throws InvalidArgument unless is_rational().
  Rational as_rational() const;
  /// Largest |numerator| or denominator among the coefficients (0 for zero).
  mpz_class height() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.terms_ == b.terms_; }

  FieldElement inverse() const;
  FieldElement pow(unsigned exponent) const;

  /// Plain-text form accepted by the coefficient parser, e.g. "(-1-sqrt(21))/2".
  std::string to_string() const;
  std::string to_latex() const;

 private:
  std::vector<Term> terms_;  // sorted by key_less, no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Total order on keys: by |k|, positive before negative.
bool key_less(SqrtKey a, SqrtKey b);

struct KeyProduct {
  std::int64_t factor;
  SqrtKey key;
};
/// sqrt(s)*sqrt(t) = factor*sqrt(key).
KeyProduct multiply_keys(SqrtKey s, SqrtKey t);

/// All elements of the subgroup of Q*/Q*^2 generated by the given keys,
/// sorted by key_less (1 first). Throws FieldTooLarge past rank 2.
std::vector<SqrtKey> field_span(std::span<const SqrtKey> keys);
/// Canonical generator list for the span of the given keys.
std::vector<SqrtKey> canonical_gens(std::span<const SqrtKey> keys);
/// Canonical generators of the compositum of the fields of a and b.
std::vector<SqrtKey> merged_gens(const FieldElement& a, const FieldElement& b);
std::vector<SqrtKey> merged_gens(std::span<const SqrtKey> a, std::span<const SqrtKey> b);

/// Image of x under sqrt(gens[j]) -> -sqrt(gens[j]) for every j whose bit is
/// set in flip_mask (bit j <-> gens[j]). x must lie in the field of gens.
FieldElement conjugate(const FieldElement& x, std::span<const SqrtKey> gens, unsigned flip_mask);

/// All 2^|gens| images under independent sign flips, identity first. With
/// gens (d1, d2) the order is: id, flip d2, flip d1, flip both.
std::vector<FieldElement> conjugates(const FieldElement& x, std::span<const SqrtKey> gens);
std::vector<FieldElement> conjugates(const FieldElement& x);

/// Product of all conjugates over the element's own field (a rational).
Rational norm(const FieldElement& x);

/// Exact principal square root, if one exists in the field of x or, when
/// allow_adjoin is set, in that field extended by one more square root.
std::optional<FieldElement> exact_sqrt(const FieldElement& x, bool allow_adjoin = true);
/// Exact cube root inside the field of x (rational radicands only).
std::optional<FieldElement> exact_real_cbrt(const FieldElement& x);

/// Real embedding with positive square roots. Throws NonRealElement when x
/// has an imaginary component.
BigReal embed(const FieldElement& x, const PrecisionContext& ctx);
BigComplex embed_complex(const FieldElement& x, const PrecisionContext& ctx);

}  // namespace rsc
