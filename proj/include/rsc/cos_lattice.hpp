#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsc/identities.hpp"
#include "rsc/transform.hpp"

namespace rsc {

/// Minimal polynomial of 2cos(2 pi/n): monic, integer, degree phi(n)/2
/// (degree 1 for n = 1, 2). Coefficients stored lowest degree first.
struct CosMinPoly {
  long n = 1;
  std::vector<mpz_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Poly<FieldElement> to_poly() const;
  /// "x^6 - x^5 - 6x^4 + 6x^3 + 8x^2 - 8x + 1"
  std::string to_string() const;
};

/// Product of (x - 2cos(2 pi k/n)) over 0 < k < n/2 with gcd(k, n) = 1, expanded
/// at extra precision and rounded. Throws PrecisionTooLow when a coefficient is
/// not within 1e-20 of an integer, InvalidArgument for n < 1.
CosMinPoly cos_min_poly(long n, const PrecisionContext& ctx);

/// Exact check of  (prod_{d|n} Psi_d)^2 = (C_n - 2)(x - 2)[(x + 2) for even n]
/// where C_n(2cos t) = 2cos(nt). Ties every cos_min_poly(d), d | n, together.
bool divisor_product_check(long n, const PrecisionContext& ctx);

long euler_phi(long n);

/// A cubic factor of cos_min_poly(n) over Q, Q(sqrt d) or Q(sqrt d1, sqrt d2).
struct QuadCubicFactor {
  long n = 0;
  long target_k = 0;
  std::vector<SqrtKey> gens;  // empty: rational cubic
  ExactCubic cubic;
  std::array<long, 3> root_k{};  // t_i = 2cos(2 pi root_k[i] / n), target first
};

/// The residues k in (0, n/2) coprime to n whose cosines share the target's
/// cubic factor: the orbit of target_k under the order-3 subgroup of
/// (Z/n)* / {+-1}. Throws InvalidArgument if gcd(target_k, n) != 1 and
/// UnsupportedDegree unless phi(n)/2 is 3, 6 or 12.
std::array<long, 3> cubic_orbit(long n, long target_k);

/// Factor cos_min_poly(n) down to the cubic containing 2cos(2 pi target_k/n).
/// The coefficient field is recovered from the symmetric functions of the orbit
/// and its conjugate orbits; the product of all conjugates of the returned
/// cubic is checked to equal p exactly. nullopt when the coefficient field is
/// not multi-quadratic (a cyclic quartic, as for n = 52).
std::optional<QuadCubicFactor> quad_cubic_factor(const CosMinPoly& p, long target_k, const PrecisionContext& ctx);

/// Factor, Ramanujan shift and identity for one target. When the factor is not
/// representable exactly the cubic is built numerically from its roots and B
/// is recognized as a rational when possible.
struct PipelineResult {
  long n = 0;
  long target_k = 0;
  CosMinPoly minpoly;
  std::array<long, 3> root_k{};
  std::optional<QuadCubicFactor> factor;
  NumericCubic numeric_cubic;
  std::optional<ExactCubic> rsc;  // p_B when B is exact
  IdentityRecord identity;
  /// The relations x_n(i) (1 - x_i) = 1 among the shifted roots, when exact.
  std::vector<CosineRelation> relations;
};

/// `height` bounds the rational recognition of B on the numeric path.
PipelineResult cos_pipeline(long n, long target_k, const PrecisionContext& ctx,
                            const mpz_class& height = mpz_class(1000000));

/// A relation summand whose value sits suspiciously close to a small rational.
struct NearMiss {
  std::string term;
  Rational rational;
  double distance;
};

struct MineEntry {
  long n = 0;
  long target_k = 0;
  std::optional<PipelineResult> result;
  std::string error;  // set when result is empty
  std::vector<NearMiss> near_misses;
};

struct MineOptions {
  bool near_miss = false;
  double near_miss_bound = 1e-5;
  mpz_class height = 1000000;
};

/// One entry per cubic factor (target = smallest k of its orbit) for every n
/// in [n_lo, n_hi], ordered by n then target_k. Distinct n run concurrently;
/// failures are recorded in their entry.
std::vector<MineEntry> mine(long n_lo, long n_hi, const PrecisionContext& ctx, const MineOptions& options = {});

nlohmann::json to_json(const PipelineResult& r);
nlohmann::json to_json(const MineEntry& e);

}  // namespace rsc
