#include "rsc/numerics/recognize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "rsc/error.hpp"

namespace rsc {

namespace {

bool within(const BigReal& v, const Rational& r, const PrecisionContext& ctx) {
  return abs(v - BigReal(r, ctx.bits() + 16)) < ctx.tolerance();
}

// Continued-fraction convergent search in double precision, used as a cheap
// prefilter before the full-precision check.
bool double_rational_close(double x, long height, double slack) {
  double p0 = 1, q0 = 0, p1 = std::floor(x), q1 = 1;
  double frac = x - p1;
  for (int iter = 0; iter < 64; ++iter) {
    if (q1 > height) return false;
    if (std::fabs(x - p1 / q1) <= slack && std::fabs(p1) <= height) return true;
    if (std::fabs(frac) < 1e-300) return false;
    double inv = 1.0 / frac;
    double a = std::floor(inv);
    frac = inv - a;
    double p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return false;
}

}  // namespace

std::vector<Rational> bounded_rationals(long height) {
  std::vector<Rational> out{Rational(0)};
  for (long h = 1; h <= height; ++h) {
    // all reduced n/d with max(|n|, d) == h
    for (long d = 1; d <= h; ++d) {
      for (long n : {h, -h}) {
        if (std::gcd(n < 0 ? -n : n, d) != 1) continue;
        out.emplace_back(n, d);
      }
      if (d == h) {
        for (long n = h - 1; n >= 1; --n) {
          if (std::gcd(n, d) != 1) continue;
          out.emplace_back(n, d);
          out.emplace_back(-n, d);
        }
      }
    }
  }
  return out;
}

std::optional<Rational> recognize_rational(const BigReal& v, const mpz_class& height, const PrecisionContext& ctx) {
  if (height < 1) throw Error(ErrorCode::InvalidArgument, "recognition height must be >= 1");
  const long bits = ctx.bits() + 16;
  BigReal x(bits);
  mpfr_set(x.get(), v.get(), MPFR_RNDN);

  // tolerance < 1/(2 h^2) makes the convergents complete (Legendre).
  BigReal legendre = BigReal(1, bits) / (BigReal(height, bits) * BigReal(height, bits) * 2);
  if (ctx.tolerance() < legendre) {
    mpz_class p0 = 1, q0 = 0;
    BigReal rem = x;
    mpz_class a;
    {
      BigReal fl(bits);
      mpfr_floor(fl.get(), rem.get());
      mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
      rem -= fl;
    }
    mpz_class p1 = a, q1 = 1;
    for (int iter = 0; iter < 4 * bits; ++iter) {
      if (q1 > height) return std::nullopt;
      if (::abs(p1) <= height) {
        Rational r(p1, q1);
        if (within(v, r, ctx)) return r;
      }
      if (rem.is_zero() || rem.log2_abs() < -(bits - 8)) return std::nullopt;
      BigReal inv = BigReal(1, bits) / rem;
      BigReal fl(bits);
      mpfr_floor(fl.get(), inv.get());
      mpfr_get_z(a.get_mpz_t(), fl.get(), MPFR_RNDN);
      rem = inv - fl;
      mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
    }
    return std::nullopt;
  }
  for (mpz_class q = 1; q <= height; ++q) {
    mpz_class p = (x * BigReal(q, bits)).round_to_integer();
    if (::abs(p) > height) continue;
    Rational r(p, q);
    if (within(v, r, ctx)) return r;
  }
  return std::nullopt;
}

std::optional<FieldElement> recognize(const BigReal& v, std::span<const SqrtKey> gens, const mpz_class& height,
                                      const PrecisionContext& ctx) {
  if (height < 1) throw Error(ErrorCode::InvalidArgument, "recognition height must be >= 1");
  const auto span = field_span(gens);
  std::vector<SqrtKey> irrational(span.begin() + 1, span.end());
  for (SqrtKey k : irrational)
    if (k < 0) throw Error(ErrorCode::NonRealElement, "recognize works over real fields only");
  if (irrational.empty()) {
    auto r = recognize_rational(v, height, ctx);
    if (!r) return std::nullopt;
    return FieldElement(*r);
  }
  if (!height.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "height too large for a field search");
  const long h = height.get_si();
  const auto coeffs = bounded_rationals(h);
  const std::size_t m = irrational.size();
  const long bits = ctx.bits() + 16;

  std::vector<double> root_d;
  std::vector<BigReal> root_big;
  for (SqrtKey k : irrational) {
    root_d.push_back(std::sqrt(static_cast<double>(k)));
    root_big.push_back(sqrt(BigReal(k, bits)));
  }
  std::vector<double> coeff_d;
  for (const auto& c : coeffs) coeff_d.push_back(c.to_double());

  const double vd = v.to_double();
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    double rem = vd, scale = std::fabs(vd);
    for (std::size_t j = 0; j < m; ++j) {
      double t = coeff_d[idx[j]] * root_d[j];
      rem -= t;
      scale += std::fabs(t);
    }
    if (double_rational_close(rem, h, 1e-9 * (1.0 + scale))) {
      BigReal r(bits);
      mpfr_set(r.get(), v.get(), MPFR_RNDN);
      for (std::size_t j = 0; j < m; ++j) r -= BigReal(coeffs[idx[j]], bits) * root_big[j];
      if (auto c0 = recognize_rational(r, height, ctx)) {
        std::vector<FieldElement::Term> terms{{1, *c0}};
        for (std::size_t j = 0; j < m; ++j) terms.push_back({irrational[j], coeffs[idx[j]]});
        return FieldElement::from_terms(std::move(terms));
      }
    }
    // advance the last coordinate fastest
    std::size_t j = m;
    while (j > 0) {
      --j;
      if (++idx[j] < coeffs.size()) break;
      idx[j] = 0;
      if (j == 0) return std::nullopt;
    }
  }
}

std::optional<FieldElement> recognize_from_conjugates(std::span<const BigReal> values, std::span<const SqrtKey> gens,
                                                      const mpz_class& height, const PrecisionContext& ctx) {
  const unsigned g = static_cast<unsigned>(gens.size());
  if (values.size() != (1u << g)) throw Error(ErrorCode::InvalidArgument, "need one value per conjugate");
  for (SqrtKey k : gens)
    if (k < 0) throw Error(ErrorCode::NonRealElement, "conjugate recognition works over real fields only");
  const long bits = ctx.bits() + 16;
  std::vector<SqrtKey> basis{1};
  if (g >= 1) basis.push_back(gens[0]);
  if (g == 2) {
    basis.push_back(gens[1]);
    basis.push_back(multiply_keys(gens[0], gens[1]).key);
  }
  // Conjugate i flips gen j when bit (g-1-j) of i is set; basis mask bit j <-> gens[j].
  std::vector<FieldElement::Term> terms;
  for (unsigned mask = 0; mask < basis.size(); ++mask) {
    BigReal acc(bits);
    for (unsigned i = 0; i < values.size(); ++i) {
      unsigned flip = 0;
      for (unsigned j = 0; j < g; ++j)
        if (i & (1u << (g - 1 - j))) flip |= 1u << j;
      if (std::popcount(mask & flip) % 2) acc -= values[i];
      else acc += values[i];
    }
    acc /= static_cast<long>(values.size());
    // acc = c * sqrt(prod of gens in mask) = c * factor * sqrt(basis key)
    BigReal radical(1, bits);
    for (unsigned j = 0; j < g; ++j)
      if (mask & (1u << j)) radical *= sqrt(BigReal(gens[j], bits));
    auto c = recognize_rational(acc / radical, height, ctx);
    if (!c) return std::nullopt;
    long factor = 1;
    if (mask == 3) factor = multiply_keys(gens[0], gens[1]).factor;
    terms.push_back({basis[mask], *c * Rational(factor)});
  }
  return FieldElement::from_terms(std::move(terms));
}

}  // namespace rsc
