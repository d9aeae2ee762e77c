#include "rsc/core/cubic.hpp"

namespace rsc {

NumericCubic to_numeric(const ExactCubic& f, const PrecisionContext& ctx) {
  return {embed_complex(f.P, ctx), embed_complex(f.Q, ctx), embed_complex(f.R, ctx)};
}

BigReal coefficient_norm(const NumericCubic& f) {
  BigReal n(1, f.P.precision());
  for (const auto* c : {&f.P, &f.Q, &f.R}) {
    BigReal m = abs(*c);
    if (m > n) n = m;
  }
  return n;
}

namespace {

bool needs_parens(const FieldElement& c) { return c.terms().size() > 1; }

template <class Render>
std::string render_cubic(const std::array<std::string, 3>& pieces, const std::array<bool, 3>& zero,
                         const std::array<bool, 3>& negative, Render term) {
  std::string out = "x^3";
  const char* powers[] = {"x^2", "x", ""};
  for (int i = 0; i < 3; ++i) {
    if (zero[i]) continue;
    out += negative[i] ? " - " : " + ";
    out += term(pieces[i], powers[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const ExactCubic& f) {
  std::array<std::string, 3> pieces;
  std::array<bool, 3> zero{}, negative{};
  const FieldElement* cs[] = {&f.P, &f.Q, &f.R};
  for (int i = 0; i < 3; ++i) {
    const FieldElement& c = *cs[i];
    zero[i] = c.is_zero();
    if (zero[i]) continue;
    if (!needs_parens(c) && c.terms()[0].coeff.sign() < 0) {
      negative[i] = true;
      pieces[i] = (-c).to_string();
    } else {
      pieces[i] = needs_parens(c) ? "(" + c.to_string() + ")" : c.to_string();
    }
  }
  return render_cubic(pieces, zero, negative, [](const std::string& coef, const char* power) {
    if (*power == '\0') return coef;
    if (coef == "1") return std::string(power);
    return coef + power;
  });
}

std::string to_string(const NumericCubic& f) {
  std::string out = "x^3";
  out += " + (" + f.P.to_string() + ")*x^2";
  out += " + (" + f.Q.to_string() + ")*x";
  out += " + (" + f.R.to_string() + ")";
  return out;
}

std::string to_latex(const ExactCubic& f) {
  std::array<std::string, 3> pieces;
  std::array<bool, 3> zero{}, negative{};
  const FieldElement* cs[] = {&f.P, &f.Q, &f.R};
  for (int i = 0; i < 3; ++i) {
    const FieldElement& c = *cs[i];
    zero[i] = c.is_zero();
    if (zero[i]) continue;
    if (!needs_parens(c) && c.terms()[0].coeff.sign() < 0) {
      negative[i] = true;
      pieces[i] = (-c).to_latex();
    } else {
      pieces[i] = needs_parens(c) ? "\\left(" + c.to_latex() + "\\right)" : c.to_latex();
    }
  }
  return render_cubic(pieces, zero, negative, [](const std::string& coef, const char* power) {
    if (*power == '\0') return coef;
    if (coef == "1") return std::string(power);
    return coef + " " + power;
  });
}

}  // namespace rsc
