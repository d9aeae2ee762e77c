#include "rsc/trig_expr.hpp"

namespace rsc {

namespace {

// cos(q pi) = sign * cos(r pi), r in [0, 1/2]
std::pair<Rational, int> fold_angle(Rational q) {
  mpz_class turns;
  mpz_class two_den = mpz_class(2) * q.den();
  mpz_fdiv_q(turns.get_mpz_t(), q.num().get_mpz_t(), two_den.get_mpz_t());
  q = q - Rational(mpz_class(2 * turns));
  if (q > Rational(1)) q = Rational(2) - q;
  if (q > Rational(1, 2)) return {Rational(1) - q, -1};
  return {q, 1};
}

std::string angle_text(const Rational& q) {
  std::string num = q.num() == 1 ? "" : q.num().get_str();
  std::string out = num + "pi";
  if (q.den() != 1) out += "/" + q.den().get_str();
  return out;
}

std::string angle_latex(const Rational& q) {
  std::string num = q.num() == 1 ? "" : q.num().get_str();
  if (q.den() == 1) return num + "\\pi";
  return "\\frac{" + num + "\\pi}{" + q.den().get_str() + "}";
}

bool negative_monomial(const FieldElement& c) { return c.terms().size() == 1 && c.terms()[0].coeff.sign() < 0; }

void append_term(std::string& out, const Rational& q, FieldElement c, bool first, bool latex) {
  auto str = [&](const FieldElement& x) { return latex ? x.to_latex() : x.to_string(); };
  bool neg = negative_monomial(c);
  if (neg) c = -c;
  if (first) out += neg ? "-" : "";
  else out += neg ? " - " : " + ";
  if (q.is_zero()) {
    out += c.terms().size() > 1 && !first ? "(" + str(c) + ")" : str(c);
    return;
  }
  const std::string cos = latex ? "\\cos " + angle_latex(q) : "cos(" + angle_text(q) + ")";
  if (c == FieldElement(1)) out += cos;
  else if (c.terms().size() == 1 && c.terms()[0].coeff.is_integer()) out += str(c) + (latex ? " " : "*") + cos;
  else out += "(" + str(c) + ")" + (latex ? " " : "*") + cos;
}

std::string render(const std::map<Rational, FieldElement>& terms, bool latex) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [q, c] : terms) {
    append_term(out, q, c, first, latex);
    first = false;
  }
  return out;
}

}  // namespace

TrigExpr::TrigExpr(const FieldElement& constant) { add(Rational(0), constant); }

TrigExpr TrigExpr::cos_pi(const Rational& q, const FieldElement& coeff) {
  TrigExpr out;
  out.add(q, coeff);
  return out;
}

void TrigExpr::add(const Rational& q, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [r, sign] = fold_angle(q);
  FieldElement value = sign < 0 ? -c : c;
  if (r == Rational(1, 2)) return;
  if (r == Rational(1, 3)) {
    value = value * FieldElement(Rational(1, 2));
    r = Rational(0);
  }
  auto it = terms_.find(r);
  if (it == terms_.end()) {
    terms_.emplace(r, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

FieldElement TrigExpr::constant() const {
  auto it = terms_.find(Rational(0));
  return it == terms_.end() ? FieldElement() : it->second;
}

TrigExpr TrigExpr::operator-() const {
  TrigExpr out = *this;
  for (auto& [q, c] : out.terms_) c = -c;
  return out;
}

TrigExpr operator+(const TrigExpr& a, const TrigExpr& b) {
  TrigExpr out = a;
  for (const auto& [q, c] : b.terms_) out.add(q, c);
  return out;
}

TrigExpr operator*(const TrigExpr& a, const TrigExpr& b) {
  TrigExpr out;
  const FieldElement half(Rational(1, 2));
  for (const auto& [p, x] : a.terms_) {
    for (const auto& [q, y] : b.terms_) {
      FieldElement c = x * y * half;
      out.add(p + q, c);
      out.add(p - q, c);
    }
  }
  return out;
}

TrigExpr operator*(const FieldElement& s, const TrigExpr& a) {
  TrigExpr out;
  for (const auto& [q, c] : a.terms_) out.add(q, s * c);
  return out;
}

std::optional<FieldElement> TrigExpr::ratio_to(const TrigExpr& other) const {
  if (other.is_zero()) return is_zero() ? std::optional<FieldElement>(FieldElement()) : std::nullopt;
  if (terms_.size() != other.terms_.size()) return std::nullopt;
  const auto& [q0, c0] = *other.terms_.begin();
  auto it = terms_.find(q0);
  if (it == terms_.end()) return std::nullopt;
  FieldElement r = it->second / c0;
  if (r * other == *this) return r;
  return std::nullopt;
}

BigReal TrigExpr::value(const PrecisionContext& ctx) const {
  BigReal acc(ctx.bits());
  for (const auto& [q, c] : terms_) acc += embed(c, ctx) * rsc::cos_pi(q, ctx.bits());
  return acc;
}

std::string TrigExpr::to_string() const { return render(terms_, false); }

std::string TrigExpr::to_latex() const { return render(terms_, true); }

std::string TrigExpr::term_text(const Rational& q, const FieldElement& coeff, bool first, bool latex) {
  std::string out;
  append_term(out, q, coeff, first, latex);
  return out;
}

}  // namespace rsc
