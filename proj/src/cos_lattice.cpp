#include "rsc/cos_lattice.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <thread>

#include "rsc/numerics/recognize.hpp"
#include "rsc/roots.hpp"

namespace rsc {

using nlohmann::json;

namespace {

using IntPoly = std::vector<mpz_class>;  // lowest degree first

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Residues k in (0, n/2) coprime to n: representatives of (Z/n)* / {+-1}.
std::vector<long> units_mod_sign(long n) {
  std::vector<long> out;
  for (long k = 1; 2 * k < n; ++k)
    if (std::gcd(k, n) == 1) out.push_back(k);
  return out;
}

long rep(long x, long n) {
  long r = ((x % n) + n) % n;
  return std::min(r, n - r);
}

long mulmod(long a, long b, long n) {
  return static_cast<long>((static_cast<__int128>(a) * b) % n);
}

// Smallest class of order 3; it generates the unique subgroup of order 3
// whenever |G| is 3, 6 or 12.
long order_three(long n, const std::vector<long>& units) {
  for (long h : units) {
    if (h == 1) continue;
    if (rep(mulmod(mulmod(h, h, n), h, n), n) == 1) return h;
  }
  throw Error(ErrorCode::UnsupportedDegree, "no element of order 3 modulo " + std::to_string(n));
}

void check_degree(long n) {
  const long deg = n <= 2 ? 1 : euler_phi(n) / 2;
  if (deg != 3 && deg != 6 && deg != 12)
    throw Error(ErrorCode::UnsupportedDegree,
                "cos_min_poly(" + std::to_string(n) + ") has degree " + std::to_string(deg) + ", need 3, 6 or 12");
}

std::array<long, 3> orbit_of(long k, long h, long n) {
  std::array<long, 3> o{k, rep(mulmod(k, h, n), n), rep(mulmod(mulmod(k, h, n), h, n), n)};
  std::sort(o.begin() + 1, o.end());
  return o;
}

// All orbits, each led by its smallest element, leaders ascending.
std::vector<std::array<long, 3>> all_orbits(long n) {
  check_degree(n);
  const auto units = units_mod_sign(n);
  const long h = order_three(n, units);
  std::vector<std::array<long, 3>> out;
  std::vector<long> seen;
  for (long k : units) {
    if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
    auto o = orbit_of(k, h, n);
    seen.insert(seen.end(), o.begin(), o.end());
    out.push_back(o);
  }
  return out;
}

BigReal two_cos(long k, long n, long bits) { return cos_pi(Rational(2 * k, n), bits) * 2; }

// -e1, e2, -e3 of the three cosines of an orbit.
std::array<BigReal, 3> orbit_coefficients(const std::array<long, 3>& o, long n, long bits) {
  const BigReal a = two_cos(o[0], n, bits), b = two_cos(o[1], n, bits), c = two_cos(o[2], n, bits);
  return {BigReal(0, bits) - (a + b + c), a * b + b * c + c * a, BigReal(0, bits) - a * b * c};
}

const mpz_class& recognition_height() {
  static const mpz_class h("1000000000000");
  return h;
}

// Square-free kernel of the rational nearest v; nullopt when v vanishes.
std::optional<SqrtKey> square_class(const BigReal& v, const PrecisionContext& ctx) {
  if (ctx.negligible(v)) return std::nullopt;
  auto r = recognize_rational(v, recognition_height(), ctx);
  if (!r) throw Error(ErrorCode::VerificationFailed, "squared difference is not rational");
  const mpz_class kernel = squarefree_split(r->num() * r->den()).kernel * r->sign();
  if (!kernel.fits_slong_p()) throw Error(ErrorCode::Overflow, "square class does not fit in a key");
  return static_cast<SqrtKey>(kernel.get_si());
}

// Quadratic subfield attached to the split values (first | rest).
std::optional<SqrtKey> split_class(const std::array<BigReal, 3>& first, const std::array<BigReal, 3>& rest,
                                   const PrecisionContext& ctx) {
  for (std::size_t j = 0; j < 3; ++j) {
    BigReal diff = (first[j] - rest[j]) / 2;
    if (auto d = square_class(diff * diff, ctx)) return d;
  }
  return std::nullopt;
}

std::array<BigReal, 3> add(const std::array<BigReal, 3>& a, const std::array<BigReal, 3>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

json complex_json(const BigComplex& z) { return {{"re", z.real().to_string()}, {"im", z.imag().to_string()}}; }

}  // namespace

long euler_phi(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "euler_phi needs n >= 1");
  long out = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    out -= out / p;
  }
  if (m > 1) out -= out / m;
  return out;
}

Poly<FieldElement> CosMinPoly::to_poly() const {
  std::vector<FieldElement> c;
  for (const auto& v : coeffs) c.emplace_back(Rational(v));
  return Poly<FieldElement>(std::move(c));
}

std::string CosMinPoly::to_string() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

CosMinPoly cos_min_poly(long n, const PrecisionContext& ctx) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cos_min_poly needs n >= 1");
  const long bits = ctx.bits() + 64;
  std::vector<BigReal> roots;
  if (n <= 2) {
    roots.push_back(BigReal(n == 1 ? 2 : -2, bits));
  } else {
    for (long k : units_mod_sign(n)) roots.push_back(two_cos(k, n, bits));
  }
  std::vector<BigReal> c{BigReal(1, bits)};
  for (const auto& r : roots) {
    std::vector<BigReal> next(c.size() + 1, BigReal(0, bits));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = next[i + 1] + c[i];
      next[i] = next[i] - r * c[i];
    }
    c = std::move(next);
  }
  CosMinPoly out;
  out.n = n;
  const BigReal limit = BigReal::from_double(1e-20, bits);
  for (const auto& v : c) {
    mpz_class z = v.round_to_integer();
    if (!(abs(v - BigReal(z, bits)) < limit))
      throw Error(ErrorCode::PrecisionTooLow, "coefficient of cos_min_poly(" + std::to_string(n) + ") not integral");
    out.coeffs.push_back(z);
  }
  return out;
}

bool divisor_product_check(long n, const PrecisionContext& ctx) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "divisor_product_check needs n >= 1");
  IntPoly lhs{1};
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) lhs = mul(lhs, cos_min_poly(d, ctx).coeffs);
  lhs = mul(lhs, lhs);
  // C_0 = 2, C_1 = x, C_{k+1} = x C_k - C_{k-1}
  IntPoly prev{2}, cur{0, 1};
  for (long k = 1; k < n; ++k) {
    IntPoly next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur[0] -= 2;
  IntPoly rhs = mul(cur, IntPoly{-2, 1});
  if (n % 2 == 0) rhs = mul(rhs, IntPoly{2, 1});
  trim(lhs);
  trim(rhs);
  return lhs == rhs;
}

std::array<long, 3> cubic_orbit(long n, long target_k) {
  if (n < 1 || std::gcd(target_k, n) != 1)
    throw Error(ErrorCode::InvalidArgument, "target k must be coprime to n");
  check_degree(n);
  const long k = rep(target_k, n);
  const auto units = units_mod_sign(n);
  return orbit_of(k, order_three(n, units), n);
}

std::optional<QuadCubicFactor> quad_cubic_factor(const CosMinPoly& p, long target_k, const PrecisionContext& ctx) {
  const long n = p.n;
  QuadCubicFactor out;
  out.n = n;
  out.root_k = cubic_orbit(n, target_k);
  out.target_k = out.root_k[0];
  const long bits = ctx.bits();

  const auto units = units_mod_sign(n);
  const long h = order_three(n, units);
  std::vector<std::array<long, 3>> cosets{out.root_k};
  for (const auto& o : all_orbits(n))
    if (o[0] != *std::min_element(out.root_k.begin(), out.root_k.end())) cosets.push_back(o);
  std::vector<std::array<BigReal, 3>> values;
  for (const auto& o : cosets) values.push_back(orbit_coefficients(o, n, bits));

  std::vector<std::size_t> order;  // coset index for each conjugate, in flip-mask order
  if (cosets.size() == 1) {
    order = {0};
  } else if (cosets.size() == 2) {
    auto d = split_class(values[0], values[1], ctx);
    if (!d) return std::nullopt;
    out.gens = {*d};
    order = {0, 1};
  } else {
    // Multi-quadratic only when G/H is a Klein four-group: every square lies in H.
    const std::array<long, 3> hset{1, rep(h, n), rep(mulmod(h, h, n), n)};
    for (long g : units)
      if (std::find(hset.begin(), hset.end(), rep(mulmod(g, g, n), n)) == hset.end()) return std::nullopt;
    std::array<std::optional<SqrtKey>, 4> split{};
    int missing = 0;
    for (std::size_t i = 1; i < 4; ++i) {
      std::array<BigReal, 3> rest = values[1 + (i % 3)];
      rest = add(rest, values[1 + ((i + 1) % 3)]);
      split[i] = split_class(add(values[0], values[i]), rest, ctx);
      if (!split[i]) ++missing;
    }
    // The sums can all be rational for one pair (n = 72); the three classes
    // multiply to a square, so one of them follows from the other two.
    if (missing > 1) return std::nullopt;
    std::array<SqrtKey, 4> cls{};
    for (std::size_t i = 1; i < 4; ++i) {
      if (split[i]) {
        cls[i] = *split[i];
        continue;
      }
      const SqrtKey u = *split[1 + (i % 3)], w = *split[1 + ((i + 1) % 3)];
      cls[i] = multiply_keys(u, w).key;
    }
    const std::vector<SqrtKey> found{cls[1], cls[2], cls[3]};
    out.gens = canonical_gens(found);
    if (out.gens.size() != 2) return std::nullopt;
    const SqrtKey both = multiply_keys(out.gens[0], out.gens[1]).key;
    // mask 1 flips the second generator (fixes the first), mask 2 the first.
    const std::array<SqrtKey, 3> fixes{out.gens[0], out.gens[1], both};
    order = {0};
    for (SqrtKey f : fixes) {
      auto it = std::find(cls.begin() + 1, cls.end(), f);
      if (it == cls.end()) return std::nullopt;
      order.push_back(static_cast<std::size_t>(it - cls.begin()));
    }
  }

  std::array<FieldElement, 3> coeff;
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<BigReal> conj;
    for (std::size_t idx : order) conj.push_back(values[idx][j]);
    auto x = recognize_from_conjugates(conj, out.gens, recognition_height(), ctx);
    if (!x) return std::nullopt;
    coeff[j] = *x;
  }
  out.cubic = ExactCubic{coeff[0], coeff[1], coeff[2]};

  Poly<FieldElement> product({FieldElement(1)});
  const unsigned masks = 1u << out.gens.size();
  for (unsigned m = 0; m < masks; ++m) {
    product = product * Poly<FieldElement>({conjugate(coeff[2], out.gens, m), conjugate(coeff[1], out.gens, m),
                                            conjugate(coeff[0], out.gens, m), FieldElement(1)});
  }
  if (!poly_equal(product, p.to_poly(), ctx)) return std::nullopt;
  return out;
}

PipelineResult cos_pipeline(long n, long target_k, const PrecisionContext& ctx, const mpz_class& height) {
  PipelineResult r;
  r.n = n;
  r.root_k = cubic_orbit(n, target_k);
  r.target_k = r.root_k[0];
  r.minpoly = cos_min_poly(n, ctx);
  std::array<RootLabel, 3> labels;
  std::array<BigComplex, 3> roots;
  for (std::size_t i = 0; i < 3; ++i) {
    labels[i] = RootLabel::two_cos(Rational(2 * r.root_k[i], n));
    roots[i] = BigComplex(two_cos(r.root_k[i], n, ctx.bits()));
  }
  r.factor = quad_cubic_factor(r.minpoly, r.target_k, ctx);
  if (r.factor) {
    r.numeric_cubic = to_numeric(r.factor->cubic, ctx);
    r.identity = build_identity(r.factor->cubic, ctx, labels);
    if (r.identity.exact_B) {
      r.rsc = rsc_from_B(*r.identity.exact_B, ctx);
      r.relations = mobius_cosine_relations(r.identity, ctx);
    }
    return r;
  }
  const BigComplex zero(0, ctx.bits());
  r.numeric_cubic = NumericCubic{zero - (roots[0] + roots[1] + roots[2]),
                                 roots[0] * roots[1] + roots[1] * roots[2] + roots[2] * roots[0],
                                 zero - roots[0] * roots[1] * roots[2]};
  r.identity = build_identity(r.numeric_cubic, ctx, labels);
  if (ctx.negligible(r.identity.B.imag())) {
    if (auto b = recognize_rational(r.identity.B.real(), height, ctx)) {
      r.identity.exact_B = FieldElement(*b);
      r.rsc = rsc_from_B(FieldElement(*b), ctx);
    }
  }
  return r;
}

namespace {

// Scale so every rational part is an integer with no common factor.
TrigExpr primitive(const TrigExpr& e) {
  mpz_class den = 1, content = 0;
  for (const auto& [q, coeff] : e.terms())
    for (const auto& t : coeff.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.den().get_mpz_t());
  for (const auto& [q, coeff] : e.terms())
    for (const auto& t : coeff.terms()) {
      const mpz_class v = t.coeff.num() * (den / t.coeff.den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
  if (content == 0) return e;
  return FieldElement(Rational(den, content)) * e;
}

// Rationals with larger denominators sit within 1e-5 of almost anything.
constexpr long kNearMissDen = 12;

// Relations are only defined up to a field scalar; scan the primitive form of
// each normalization that makes one coefficient 1.
std::vector<NearMiss> near_misses(const PipelineResult& r, const PrecisionContext& ctx, const MineOptions& opt) {
  std::vector<NearMiss> out;
  const PrecisionContext loose(ctx.bits(), BigReal::from_double(opt.near_miss_bound, ctx.bits()));
  for (const auto& rel : r.relations) {
    std::vector<TrigExpr> forms{primitive(rel.relation)};
    for (const auto& [q, coeff] : rel.relation.terms())
      if (!coeff.is_zero()) forms.push_back(primitive(coeff.inverse() * rel.relation));
    for (const auto& form : forms) {
      for (const auto& [q, coeff] : form.terms()) {
        if (q.is_zero() || !coeff.is_real()) continue;
        const BigReal v = embed(coeff, ctx) * cos_pi(q, ctx.bits());
        auto near = recognize_rational(v, mpz_class(100), loose);
        if (!near || near->den() > kNearMissDen) continue;
        const BigReal gap = abs(v - BigReal(*near, ctx.bits()));
        std::string text = TrigExpr::term_text(q, coeff, true, false);
        const bool seen = std::any_of(out.begin(), out.end(), [&](const NearMiss& m) { return m.term == text; });
        if (!seen && gap.to_double() < opt.near_miss_bound && !ctx.negligible(gap))
          out.push_back({std::move(text), *near, gap.to_double()});
      }
    }
  }
  return out;
}

std::vector<MineEntry> mine_one(long n, const PrecisionContext& ctx, const MineOptions& opt) {
  std::vector<MineEntry> out;
  std::vector<std::array<long, 3>> orbits;
  try {
    orbits = all_orbits(n);
  } catch (const Error& e) {
    out.push_back({n, 1, std::nullopt, e.what(), {}});
    return out;
  }
  for (const auto& o : orbits) {
    MineEntry e;
    e.n = n;
    e.target_k = o[0];
    try {
      e.result = cos_pipeline(n, o[0], ctx, opt.height);
      if (opt.near_miss) e.near_misses = near_misses(*e.result, ctx, opt);
    } catch (const Error& err) {
      e.error = err.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<MineEntry> mine(long n_lo, long n_hi, const PrecisionContext& ctx, const MineOptions& options) {
  if (n_lo < 1 || n_hi < n_lo) throw Error(ErrorCode::InvalidArgument, "mine needs 1 <= n_lo <= n_hi");
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<MineEntry> out;
  std::vector<std::future<std::vector<MineEntry>>> pending;
  auto drain = [&](std::size_t keep) {
    while (pending.size() > keep) {
      auto part = pending.front().get();
      pending.erase(pending.begin());
      for (auto& e : part) out.push_back(std::move(e));
    }
  };
  for (long n = n_lo; n <= n_hi; ++n) {
    pending.push_back(std::async(std::launch::async, mine_one, n, std::cref(ctx), std::cref(options)));
    drain(workers);
  }
  drain(0);
  std::stable_sort(out.begin(), out.end(), [](const MineEntry& a, const MineEntry& b) {
    return a.n != b.n ? a.n < b.n : a.target_k < b.target_k;
  });
  return out;
}

json to_json(const PipelineResult& r) {
  json j;
  j["n"] = r.n;
  j["target_k"] = r.target_k;
  j["minpoly"] = r.minpoly.to_string();
  j["degree"] = r.minpoly.degree();
  j["root_k"] = r.root_k;
  j["exact"] = r.factor.has_value();
  if (r.factor) {
    j["gens"] = r.factor->gens;
    j["cubic"] = to_string(r.factor->cubic);
  } else {
    j["gens"] = json::array();
    j["cubic"] = to_string(r.numeric_cubic);
  }
  j["numeric_cubic"] = {{"P", complex_json(r.numeric_cubic.P)},
                        {"Q", complex_json(r.numeric_cubic.Q)},
                        {"R", complex_json(r.numeric_cubic.R)}};
  j["rsc"] = r.rsc ? json(to_string(*r.rsc)) : json(nullptr);
  j["identity"] = to_json(r.identity);
  j["identity_text"] = render(r.identity, Format::Text);
  json rel = json::array();
  for (const auto& c : r.relations)
    rel.push_back({{"from", c.from}, {"to", c.to}, {"relation", c.relation.to_string()}});
  j["relations"] = rel;
  return j;
}

json to_json(const MineEntry& e) {
  json j;
  j["n"] = e.n;
  j["target_k"] = e.target_k;
  j["ok"] = e.result.has_value();
  if (e.result)
    j["result"] = to_json(*e.result);
  else
    j["error"] = e.error;
  json nm = json::array();
  for (const auto& m : e.near_misses)
    nm.push_back({{"term", m.term}, {"rational", m.rational.to_string()}, {"distance", m.distance}});
  j["near_misses"] = nm;
  return j;
}

}  // namespace rsc
