#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rsc/numerics/bigfloat.hpp"
#include "rsc/numerics/field_element.hpp"
#include "rsc/numerics/rational.hpp"

namespace rsc {

/// Smallest-denominator rational p/q with q <= height and |p| <= height
/// lying within ctx.tolerance() of v. Uses continued-fraction convergents,
/// which are complete when tolerance < 1/(2*height^2); otherwise every
/// denominator up to height is tried.
std::optional<Rational> recognize_rational(const BigReal& v, const mpz_class& height, const PrecisionContext& ctx);

/// Recover an exact element of the field spanned by gens from one real value.
///
/// Candidates assign a reduced rational c_j (|num|, den <= height) to each
/// irrational basis element sqrt(k_j); the rational part is then recovered
/// from the remainder with recognize_rational. Coefficient tuples are tried
/// in lexicographic order, each coordinate running through the rationals
/// ordered by height, then denominator, then |numerator| descending
/// (positive first), so
/// the first hit is the smallest candidate. Cost grows like
/// (2*height^2)^(#irrational basis elements); intended for desk-scale heights.
/// Real fields only.
std::optional<FieldElement> recognize(const BigReal& v, std::span<const SqrtKey> gens, const mpz_class& height,
                                      const PrecisionContext& ctx);

/// Recover an element from the embeddings of all of its conjugates, given in
/// the order produced by conjugates(x, gens). Each coordinate is isolated by
/// character sums and recognized as a rational; this needs no search.
std::optional<FieldElement> recognize_from_conjugates(std::span<const BigReal> values, std::span<const SqrtKey> gens,
                                                      const mpz_class& height, const PrecisionContext& ctx);

/// The rationals with |num| <= height and den <= height in search order.
std::vector<Rational> bounded_rationals(long height);

}  // namespace rsc
