#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rsc/core/cubic.hpp"
#include "rsc/core/mobius.hpp"
#include "rsc/numerics/bigfloat.hpp"

namespace rsc {

/// One value of the trigonometric root family
///   s_k = ((3+B)/2 + sqrt(27+B^2) cos(k pi/3 + arctan(3 sqrt3 / B)/3)) / 3.
/// For a shifted cubic, value holds u_k = (a - s_k)/c instead.
struct TrigRoot {
  int k;
  BigReal value;
  BigReal angle;  // k pi/3 + arctan(3 sqrt3/B)/3
};

/// Roots of p_B for real B: {s2, s4, s6} for B > 0, {s1, s3, s5} for B < 0.
/// At B = 0 the offset arctan(3 sqrt3/B)/3 is replaced by its limit pi/6 and
/// the even indices are reported.
std::array<TrigRoot, 3> rsc_trig_roots(const BigReal& B, const PrecisionContext& ctx);

/// Trigonometric roots u_k of a real cubic with c != 0 via its Ramanujan shift.
/// Throws RepeatedRoots, TranslationCase (c = 0) or NonRealShift (a, c or B not real).
std::array<TrigRoot, 3> cubic_trig_roots(const ExactCubic& f, const PrecisionContext& ctx);
std::array<TrigRoot, 3> cubic_trig_roots(const NumericCubic& f, const PrecisionContext& ctx);

/// All three roots with multiplicity: closed form for the depressed cubic,
/// then Newton polishing at extra precision. Sorted by real part, then
/// imaginary part. Throws NonConvergence if a residual stays above
/// tolerance * max(1, |f|).
std::array<BigComplex, 3> solve_numeric(const NumericCubic& f, const PrecisionContext& ctx);
std::array<BigComplex, 3> solve_numeric(const ExactCubic& f, const PrecisionContext& ctx);

/// The three roots of f when all of them lie in the real field spanned by its
/// coefficients, sorted by embedded value; nullopt otherwise. Each root is
/// recovered from the numeric roots of the conjugate cubics and confirmed by
/// exact evaluation.
std::optional<std::array<FieldElement, 3>> exact_roots(const ExactCubic& f, const PrecisionContext& ctx);

/// Sort by real part, then imaginary part (real parts within tolerance tie).
void sort_roots(std::vector<BigComplex>& roots, const PrecisionContext& ctx);

/// Smallest over matchings of the largest pairwise distance.
BigReal multiset_distance(std::span<const BigComplex> a, std::span<const BigComplex> b);

/// How a map permutes a list of values: map(values[i]) ~ values[sigma[i]].
struct Permutation {
  std::vector<int> sigma;
  /// Cycle notation over the value indices, e.g. "(0 2 1)"; fixed points omitted.
  std::string cycles() const;
  bool is_identity() const;
  /// Length of each cycle including fixed points, in order of first index.
  std::vector<int> cycle_type() const;
};

/// Throws NotAPermutation if some image matches no value, or two images match the same one.
Permutation permutation_under(const MobiusMap<BigComplex>& map, std::span<const BigComplex> values,
                              const PrecisionContext& ctx);

}  // namespace rsc
