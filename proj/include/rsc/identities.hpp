#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rsc/core/cubic.hpp"
#include "rsc/trig_expr.hpp"

namespace rsc {

/// What is known exactly about a root t of the source cubic.
struct RootLabel {
  enum class Kind { Symbol, Exact, TwoCos };
  Kind kind = Kind::Symbol;
  std::string symbol;   // Symbol: display name such as "t1"
  FieldElement exact;   // Exact: the root itself
  Rational angle;       // TwoCos: t = 2cos(angle*pi)

  static RootLabel named(std::string name);
  static RootLabel of(FieldElement value);
  static RootLabel two_cos(Rational angle);
  BigComplex value(const PrecisionContext& ctx) const;
  std::string to_string() const;
  friend bool operator==(const RootLabel&, const RootLabel&) = default;
};

/// Indices into cube_roots(): principal, times omega, times omega^2.
struct BranchChoice {
  std::array<int, 3> lhs{};
  int rhs_inner = 0;
  int rhs_outer = 0;
  friend bool operator==(const BranchChoice&, const BranchChoice&) = default;
};

/// A verified instance of
///   cbrt(a - c t1) + cbrt(a - c t2) + cbrt(a - c t3) = cbrt((B-9)/2 + 3 cbrt((27+B^2)/4))
/// for the roots t_i of the source cubic (a = 0, c = -1 when the source is p_B).
/// Exact values are kept when known so renderings can show surds.
struct IdentityRecord {
  static constexpr int kSchema = 1;

  long precision_bits = 0;
  std::optional<ExactCubic> exact_source;
  NumericCubic source;
  std::optional<FieldElement> exact_a, exact_c, exact_B;
  BigComplex a, c, B;
  std::array<RootLabel, 3> roots;
  std::array<BigComplex, 3> root_values;
  BranchChoice branches;
  bool all_real = false;  // branches are the real cube roots of real radicands
  double residual_log2 = 0;

  /// a - c t_i
  std::array<BigComplex, 3> lhs_values() const;
  /// (B-9)/2 + 3 w where w is the chosen cube root of (27+B^2)/4
  BigComplex rhs_radicand_value() const;
  /// Both sides evaluated on the recorded branches.
  BigComplex lhs_sum() const;
  BigComplex rhs_value() const;

  friend bool operator==(const IdentityRecord&, const IdentityRecord&) = default;
};

/// Build the identity for f. Roots are labelled by `labels` when given (each
/// must be a root of f), by their exact values when they lie in the
/// coefficient field, and as t1, t2, t3 otherwise. Throws RepeatedRoots,
/// TranslationCase (c = 0), InvalidArgument for a bad label, NoBranchFound.
IdentityRecord build_identity(const ExactCubic& f, const PrecisionContext& ctx,
                              const std::optional<std::array<RootLabel, 3>>& labels = std::nullopt);
IdentityRecord build_identity(const NumericCubic& f, const PrecisionContext& ctx,
                              const std::optional<std::array<RootLabel, 3>>& labels = std::nullopt);

/// |f(v)| / max(1, |f|)
BigReal verify_value_is_root(const BigComplex& v, const NumericCubic& f);
BigReal verify_value_is_root(const BigComplex& v, const ExactCubic& f, const PrecisionContext& ctx);

enum class Format { Text, Json, Latex };

/// Radicands on both sides are multiplied by `scale` (so the identity is
/// multiplied by its cube root); scale 2/9 turns the p_0 identity into the
/// familiar sqrt[3]{1/9} form.
struct RenderOptions {
  FieldElement scale = FieldElement(1);
};

std::string render(const IdentityRecord& rec, Format format, const RenderOptions& options = {});
nlohmann::json to_json(const IdentityRecord& rec);
/// Inverse of to_json; throws ParseError on schema violations.
IdentityRecord identity_from_json(const nlohmann::json& j);

/// Exact text of the i-th left radicand a - c t_i (scaled), or nullopt in numeric mode.
std::optional<std::string> lhs_term_text(const IdentityRecord& rec, int i, const FieldElement& scale = FieldElement(1));

/// x_j (1 - x_i) - 1 with x = a - c t for each pair j = n(i) under
/// n(x) = 1/(1-x): a trigonometric relation among cosines that vanishes.
/// Needs exact a, c and cosine-labelled roots.
struct CosineRelation {
  int from, to;
  TrigExpr relation;
};
std::vector<CosineRelation> mobius_cosine_relations(const IdentityRecord& rec, const PrecisionContext& ctx);

}  // namespace rsc
