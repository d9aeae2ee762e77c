#include "rsc/numerics/field_element.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "rsc/error.hpp"

namespace rsc {

namespace {

std::int64_t checked_narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorCode::Overflow, "square-root key exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

std::optional<SqrtKey> key_from_mpz(const mpz_class& k) {
  if (!k.fits_slong_p()) return std::nullopt;
  return static_cast<SqrtKey>(k.get_si());
}

struct KeyLess {
  bool operator()(SqrtKey a, SqrtKey b) const { return key_less(a, b); }
};

using TermMap = std::map<SqrtKey, Rational, KeyLess>;

std::vector<FieldElement::Term> to_terms(const TermMap& m) {
  std::vector<FieldElement::Term> out;
  out.reserve(m.size());
  for (const auto& [k, c] : m)
    if (!c.is_zero()) out.push_back({k, c});
  return out;
}

std::vector<SqrtKey> keys_of(const FieldElement& x) {
  std::vector<SqrtKey> keys;
  for (const auto& t : x.terms()) keys.push_back(t.key);
  return keys;
}

// Position of key within the span of gens as a bitmask over gens.
unsigned key_mask(SqrtKey key, std::span<const SqrtKey> gens) {
  if (key == 1) return 0;
  if (!gens.empty() && key == gens[0]) return 1;
  if (gens.size() == 2) {
    if (key == gens[1]) return 2;
    if (key == multiply_keys(gens[0], gens[1]).key) return 3;
  }
  throw Error(ErrorCode::FieldTooLarge, "sqrt(" + std::to_string(key) + ") is outside the given field");
}

mpz_class lcm_of_dens(const std::vector<FieldElement::Term>& terms) {
  mpz_class l = 1;
  for (const auto& t : terms) l = lcm(l, t.coeff.den());
  return l;
}

std::optional<FieldElement> sqrt_in_field(const FieldElement& x, std::span<const SqrtKey> gens) {
  if (x.is_zero()) return FieldElement();
  if (gens.empty()) {
    if (!x.is_rational()) return std::nullopt;
    auto r = exact_sqrt(x.as_rational());
    if (!r) return std::nullopt;
    return FieldElement(*r);
  }
  const SqrtKey d = gens.back();
  const auto rest = gens.first(gens.size() - 1);
  const unsigned flip = 1u << (gens.size() - 1);
  const FieldElement sx = conjugate(x, gens, flip);
  const FieldElement root_d = FieldElement::sqrt_of(d);
  const FieldElement u = (x + sx) * FieldElement(Rational(1, 2));
  const FieldElement v = (x - sx) * root_d * FieldElement(Rational(1, 2 * d));
  if (v.is_zero()) {
    if (auto y = sqrt_in_field(u, rest)) return y;
    if (auto w = sqrt_in_field(u * FieldElement(Rational(1, d)), rest)) return *w * root_d;
    return std::nullopt;
  }
  const FieldElement n = u * u - FieldElement(d) * v * v;
  auto s = sqrt_in_field(n, rest);
  if (!s) return std::nullopt;
  for (int sign : {1, -1}) {
    FieldElement t = (u + FieldElement(sign) * *s) * FieldElement(Rational(1, 2));
    auto p = sqrt_in_field(t, rest);
    if (!p || p->is_zero()) continue;
    FieldElement q = v / (FieldElement(2) * *p);
    FieldElement y = *p + q * root_d;
    if (y * y == x) return y;
  }
  return std::nullopt;
}

bool real_part_is_zero(const FieldElement& x) {
  return std::none_of(x.terms().begin(), x.terms().end(), [](const auto& t) { return t.key > 0; });
}

FieldElement principal(FieldElement y) {
  PrecisionContext ctx(256);
  BigComplex z = embed_complex(y, ctx);
  bool negate = real_part_is_zero(y) ? z.imag().sign() < 0 : z.real().sign() < 0;
  return negate ? -y : y;
}

std::string integer_term(const mpz_class& n, SqrtKey key, bool first) {
  std::string out;
  mpz_class mag = ::abs(n);
  if (n < 0) out += "-";
  else if (!first) out += "+";
  if (key == 1) return out + mag.get_str();
  if (mag != 1) out += mag.get_str() + "*";
  return out + "sqrt(" + std::to_string(key) + ")";
}

std::string latex_term(const mpz_class& n, SqrtKey key, bool first) {
  std::string out;
  mpz_class mag = ::abs(n);
  if (n < 0) out += "-";
  else if (!first) out += "+";
  if (key == 1) return out + mag.get_str();
  if (mag != 1) out += mag.get_str();
  if (key < 0) return out + "\\sqrt{" + std::to_string(-key) + "}\\,i";
  return out + "\\sqrt{" + std::to_string(key) + "}";
}

}  // namespace

bool key_less(SqrtKey a, SqrtKey b) {
  const auto ua = a < 0 ? -static_cast<__int128>(a) : a;
  const auto ub = b < 0 ? -static_cast<__int128>(b) : b;
  if (ua != ub) return ua < ub;
  return a > b;
}

KeyProduct multiply_keys(SqrtKey s, SqrtKey t) {
  const std::int64_t g = std::gcd(s < 0 ? -s : s, t < 0 ? -t : t);
  const __int128 u = static_cast<__int128>(s / g) * static_cast<__int128>(t / g);
  const std::int64_t factor = (s < 0 && t < 0) ? -g : g;
  return {factor, checked_narrow(u)};
}

std::vector<SqrtKey> field_span(std::span<const SqrtKey> keys) {
  std::vector<SqrtKey> span{1};
  for (SqrtKey k : keys) {
    if (std::find(span.begin(), span.end(), k) != span.end()) continue;
    std::vector<SqrtKey> extra;
    for (SqrtKey s : span) extra.push_back(multiply_keys(s, k).key);
    span.insert(span.end(), extra.begin(), extra.end());
    if (span.size() > 4)
      throw Error(ErrorCode::FieldTooLarge, "more than two independent square roots");
  }
  std::sort(span.begin(), span.end(), key_less);
  return span;
}

std::vector<SqrtKey> canonical_gens(std::span<const SqrtKey> keys) {
  const auto span = field_span(keys);
  std::vector<SqrtKey> gens;
  if (span.size() >= 2) gens.push_back(span[1]);
  if (span.size() == 4) gens.push_back(span[2]);
  return gens;
}

std::vector<SqrtKey> merged_gens(std::span<const SqrtKey> a, std::span<const SqrtKey> b) {
  std::vector<SqrtKey> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return canonical_gens(all);
}

std::vector<SqrtKey> merged_gens(const FieldElement& a, const FieldElement& b) {
  auto ka = keys_of(a), kb = keys_of(b);
  return merged_gens(ka, kb);
}

FieldElement::FieldElement(long value) {
  if (value != 0) terms_.push_back({1, Rational(value)});
}

FieldElement::FieldElement(const Rational& value) {
  if (!value.is_zero()) terms_.push_back({1, value});
}

FieldElement FieldElement::sqrt_of(const mpz_class& n) {
  if (n == 0) return FieldElement();
  auto split = squarefree_split(n);
  auto key = key_from_mpz(split.kernel);
  if (!key) throw Error(ErrorCode::Overflow, "square-free kernel exceeds 64 bits");
  return from_terms({{*key, Rational(split.root)}});
}

FieldElement FieldElement::sqrt_of(const Rational& r) {
  return sqrt_of(r.num() * r.den()) * FieldElement(Rational(mpz_class(1), r.den()));
}

FieldElement FieldElement::from_terms(std::vector<Term> terms) {
  TermMap m;
  for (auto& t : terms) {
    if (t.key == 0) throw Error(ErrorCode::InvalidArgument, "zero square-root key");
    m[t.key] += t.coeff;
  }
  FieldElement out;
  out.terms_ = to_terms(m);
  auto keys = keys_of(out);
  field_span(keys);
  return out;
}

Rational FieldElement::coeff(SqrtKey key) const {
  for (const auto& t : terms_)
    if (t.key == key) return t.coeff;
  return Rational();
}

std::vector<SqrtKey> FieldElement::gens() const {
  auto keys = keys_of(*this);
  return canonical_gens(keys);
}

bool FieldElement::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 1); }

bool FieldElement::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.key > 0; });
}

Rational FieldElement::as_rational() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, to_string() + " is not rational");
  return terms_.empty() ? Rational() : terms_[0].coeff;
}

mpz_class FieldElement::height() const {
  mpz_class h = 0;
  for (const auto& t : terms_) h = std::max(h, t.coeff.height());
  return h;
}

FieldElement FieldElement::operator-() const {
  FieldElement out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  merged_gens(*this, o);
  TermMap m;
  for (const auto& t : terms_) m[t.key] += t.coeff;
  for (const auto& t : o.terms_) m[t.key] += t.coeff;
  terms_ = to_terms(m);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  merged_gens(*this, o);
  TermMap m;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto p = multiply_keys(a.key, b.key);
      m[p.key] += a.coeff * b.coeff * Rational(p.factor);
    }
  }
  terms_ = to_terms(m);
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "field division by zero");
  if (is_rational()) return FieldElement(Rational(1) / as_rational());
  auto conj = conjugates(*this);
  FieldElement others(1);
  for (std::size_t i = 1; i < conj.size(); ++i) others *= conj[i];
  FieldElement n = *this * others;
  return others * FieldElement(Rational(1) / n.as_rational());
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  merged_gens(*this, o);
  return *this *= o.inverse();
}

FieldElement FieldElement::pow(unsigned exponent) const {
  FieldElement result(1), base(*this);
  while (exponent) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

std::string FieldElement::to_string() const {
  if (terms_.empty()) return "0";
  const mpz_class den = lcm_of_dens(terms_);
  std::string body;
  bool first = true;
  for (const auto& t : terms_) {
    body += integer_term(t.coeff.num() * (den / t.coeff.den()), t.key, first);
    first = false;
  }
  if (den == 1) return body;
  if (terms_.size() == 1) return body + "/" + den.get_str();
  return "(" + body + ")/" + den.get_str();
}

std::string FieldElement::to_latex() const {
  if (terms_.empty()) return "0";
  const mpz_class den = lcm_of_dens(terms_);
  std::string body;
  bool first = true;
  for (const auto& t : terms_) {
    body += latex_term(t.coeff.num() * (den / t.coeff.den()), t.key, first);
    first = false;
  }
  if (den == 1) return body;
  if (body[0] == '-' && terms_.size() == 1) return "-\\frac{" + body.substr(1) + "}{" + den.get_str() + "}";
  return "\\frac{" + body + "}{" + den.get_str() + "}";
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

FieldElement conjugate(const FieldElement& x, std::span<const SqrtKey> gens, unsigned flip_mask) {
  std::vector<FieldElement::Term> terms;
  for (const auto& t : x.terms()) {
    unsigned m = key_mask(t.key, gens);
    bool negate = std::popcount(m & flip_mask) % 2 == 1;
    terms.push_back({t.key, negate ? -t.coeff : t.coeff});
  }
  return FieldElement::from_terms(std::move(terms));
}

std::vector<FieldElement> conjugates(const FieldElement& x, std::span<const SqrtKey> gens) {
  const unsigned g = static_cast<unsigned>(gens.size());
  std::vector<FieldElement> out;
  for (unsigned i = 0; i < (1u << g); ++i) {
    unsigned flip = 0;
    for (unsigned j = 0; j < g; ++j)
      if (i & (1u << (g - 1 - j))) flip |= 1u << j;
    out.push_back(conjugate(x, gens, flip));
  }
  return out;
}

std::vector<FieldElement> conjugates(const FieldElement& x) {
  auto gens = x.gens();
  return conjugates(x, gens);
}

Rational norm(const FieldElement& x) {
  FieldElement p(1);
  for (const auto& c : conjugates(x)) p *= c;
  return p.as_rational();
}

std::optional<FieldElement> exact_sqrt(const FieldElement& x, bool allow_adjoin) {
  if (x.is_zero()) return FieldElement();
  const auto gens = x.gens();
  if (auto y = sqrt_in_field(x, gens)) return principal(*y);
  if (!allow_adjoin) return std::nullopt;

  std::vector<mpz_class> candidates;
  if (x.is_rational()) {
    const Rational r = x.as_rational();
    candidates.push_back(squarefree_split(r.num() * r.den()).kernel);
  } else if (gens.size() == 1) {
    // x = A + B*sqrt(d); x = r*w^2 forces A^2 - d*B^2 to be a rational square and
    // r to be the kernel of (A +- sqrt(A^2 - d*B^2))/2.
    const SqrtKey d = gens[0];
    const Rational a = x.coeff(1), b = x.coeff(d);
    auto s = exact_sqrt(a * a - Rational(d) * b * b);
    if (!s) return std::nullopt;
    for (const Rational& half : {(a + *s) / Rational(2), (a - *s) / Rational(2)}) {
      if (half.is_zero()) continue;
      candidates.push_back(squarefree_split(half.num() * half.den()).kernel);
    }
  }
  for (const auto& k : candidates) {
    auto key = key_from_mpz(k);
    if (!key || *key == 1) continue;
    std::vector<SqrtKey> ext(gens.begin(), gens.end());
    ext.push_back(*key);
    std::vector<SqrtKey> ext_gens;
    try {
      ext_gens = canonical_gens(ext);
    } catch (const Error&) {
      continue;
    }
    const FieldElement root_r = FieldElement::from_terms({{*key, Rational(1)}});
    const FieldElement quotient = x * FieldElement(Rational(mpz_class(1), k));
    if (auto w = sqrt_in_field(quotient, ext_gens)) {
      FieldElement y = *w * root_r;
      if (y * y == x) return principal(y);
    }
  }
  return std::nullopt;
}

std::optional<FieldElement> exact_real_cbrt(const FieldElement& x) {
  if (!x.is_rational()) return std::nullopt;
  auto r = exact_cbrt(x.as_rational());
  if (!r) return std::nullopt;
  return FieldElement(*r);
}

BigComplex embed_complex(const FieldElement& x, const PrecisionContext& ctx) {
  const long bits = ctx.bits() + 16;
  BigReal re(bits), im(bits);
  for (const auto& t : x.terms()) {
    BigReal c(t.coeff, bits);
    if (t.key == 1) {
      re += c;
    } else if (t.key > 0) {
      re += c * sqrt(BigReal(t.key, bits));
    } else {
      im += c * sqrt(BigReal(-t.key, bits));
    }
  }
  BigReal r(ctx.bits()), i(ctx.bits());
  mpfr_set(r.get(), re.get(), MPFR_RNDN);
  mpfr_set(i.get(), im.get(), MPFR_RNDN);
  return {r, i};
}

BigReal embed(const FieldElement& x, const PrecisionContext& ctx) {
  if (!x.is_real()) throw Error(ErrorCode::NonRealElement, x.to_string() + " is not real");
  return embed_complex(x, ctx).real();
}

}  // namespace rsc
