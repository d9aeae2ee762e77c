#pragma once

#include <map>
#include <optional>
#include <string>

#include "rsc/numerics/bigfloat.hpp"
#include "rsc/numerics/field_element.hpp"

namespace rsc {

/// Finite sum  sum_q coeff_q * cos(q pi)  with field coefficients.
///
/// Angles are kept in [0, 1/2): cos is folded by periodicity, evenness and
/// cos(pi - x) = -cos(x); the rational values at 0, 1/3 and 1/2 collapse into
/// the constant (angle 0) term. The form is canonical for a given spelling but
/// is not a basis, so two equal numbers may still have different forms.
class TrigExpr {
 public:
  TrigExpr() = default;
  TrigExpr(const FieldElement& constant);  // NOLINT(google-explicit-constructor)
  static TrigExpr cos_pi(const Rational& q, const FieldElement& coeff = FieldElement(1));

  const std::map<Rational, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElement constant() const;

  TrigExpr operator-() const;
  friend TrigExpr operator+(const TrigExpr& a, const TrigExpr& b);
  friend TrigExpr operator-(const TrigExpr& a, const TrigExpr& b) { return a + (-b); }
  /// Product-to-sum: cos x cos y = (cos(x+y) + cos(x-y))/2.
  friend TrigExpr operator*(const TrigExpr& a, const TrigExpr& b);
  friend TrigExpr operator*(const FieldElement& s, const TrigExpr& a);
  friend bool operator==(const TrigExpr&, const TrigExpr&) = default;

  /// The field scalar r with *this == r * other, if any.
  std::optional<FieldElement> ratio_to(const TrigExpr& other) const;

  BigReal value(const PrecisionContext& ctx) const;
  /// e.g. "2*sqrt(6)*cos(11pi/36) + 6*cos(5pi/18)"
  std::string to_string() const;
  std::string to_latex() const;
  /// One summand coeff*cos(q pi) exactly as given (no folding), with a
  /// leading " + " or " - " unless first.
  static std::string term_text(const Rational& q, const FieldElement& coeff, bool first, bool latex);

 private:
  void add(const Rational& q, const FieldElement& c);
  std::map<Rational, FieldElement> terms_;  // no zero coefficients
};

}  // namespace rsc
