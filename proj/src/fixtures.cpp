#include "rsc/fixtures.hpp"

#include <functional>

#include "rsc/cos_lattice.hpp"
#include "rsc/identities.hpp"
#include "rsc/parse.hpp"
#include "rsc/transform.hpp"

namespace rsc {

namespace {

class Checker {
 public:
  explicit Checker(const PrecisionContext& ctx) : ctx_(ctx), worst_(0, ctx.bits()) {}

  void close(const BigReal& lhs, const BigReal& rhs, const std::string& what) { small(lhs - rhs, what); }

  void small(const BigReal& r, const std::string& what) {
    const BigReal a = abs(r);
    if (worst_ < a) worst_ = a;
    if (!ctx_.negligible(a)) note(what + " off by " + a.to_string(6));
  }

  void exact(bool ok, const std::string& what) {
    if (ok) return;
    worst_ = BigReal(1, ctx_.bits());
    note(what + " differs");
  }

  FixtureResult finish(std::string name, std::string statement) const {
    return {std::move(name), std::move(statement), worst_, ctx_.negligible(worst_), detail_};
  }

 private:
  void note(const std::string& s) { detail_ += (detail_.empty() ? "" : "; ") + s; }

  const PrecisionContext& ctx_;
  BigReal worst_;
  std::string detail_;
};

struct Env {
  const PrecisionContext& ctx;
  BigReal n(long v) const { return BigReal(v, ctx.bits()); }
  BigReal q(long a, long b) const { return BigReal(Rational(a, b), ctx.bits()); }
  BigReal rt(long v) const { return sqrt(n(v)); }
  BigReal cs(long a, long b) const { return cos_pi(Rational(a, b), ctx.bits()); }
  BigReal fe(const char* text) const { return embed(parse_coeff(text), ctx); }
};

FieldElement fe(const char* text) { return parse_coeff(text); }

bool proportional_relation(const std::vector<CosineRelation>& rels, const TrigExpr& printed) {
  for (const auto& r : rels)
    if (r.relation.ratio_to(printed)) return true;
  return false;
}

FixtureResult ninths(const Env& e) {
  Checker c(e.ctx);
  const BigReal lhs = cbrt(e.q(1, 9)) - cbrt(e.q(2, 9)) + cbrt(e.q(4, 9));
  const BigReal rhs = cbrt(cbrt(e.n(2)) - e.n(1));
  c.close(lhs, rhs, "printed sides");
  const auto rec = build_identity(rsc_from_B(FieldElement(0), e.ctx), e.ctx);
  const BigReal lambda = cbrt(e.q(2, 9));
  c.close(rec.lhs_sum().real() * lambda, lhs, "scaled identity sum");
  c.close(rec.rhs_value().real() * lambda, rhs, "scaled identity right side");
  c.exact(rec.all_real, "real branches");
  return c.finish("ninths", "cbrt(1/9) - cbrt(2/9) + cbrt(4/9) = cbrt(cbrt(2) - 1)");
}

FixtureResult cos_ninths(const Env& e) {
  Checker c(e.ctx);
  const BigReal lhs = cbrt(e.cs(2, 9)) + cbrt(e.cs(4, 9)) - cbrt(e.cs(1, 9));
  const BigReal rhs = cbrt(e.q(3, 2) * (cbrt(e.n(9)) - e.n(2)));
  c.close(lhs, rhs, "printed sides");
  const auto rec = build_identity(rsc_from_B(FieldElement(-3), e.ctx), e.ctx);
  const BigReal k = cbrt(e.n(2));
  c.close(rec.lhs_sum().real() / k, lhs, "identity sum over cbrt(2)");
  c.close(rec.rhs_value().real() / k, rhs, "identity right side over cbrt(2)");
  return c.finish("cos-ninths", "cbrt(cos(2pi/9)) + cbrt(cos(4pi/9)) - cbrt(cos(pi/9)) = cbrt(3/2 (cbrt(9) - 2))");
}

FixtureResult sqrt3_example(const Env& e) {
  Checker c(e.ctx);
  const BigReal s3 = e.rt(3);
  const BigReal lhs = cbrt(s3 * 2 - e.n(2)) - cbrt(s3 - e.n(1)) + cbrt(s3 * 2 + e.n(4));
  const BigReal rhs = s3 * cbrt(e.n(1) + s3 * (cbrt(e.n(4)) - e.n(1)));
  c.close(lhs, rhs, "printed sides");
  const auto rec = build_identity(rsc_from_B(fe("3*sqrt(3)"), e.ctx), e.ctx);
  const BigReal k = cbrt(e.n(2));
  c.close(rec.lhs_sum().real() * k, lhs, "identity sum times cbrt(2)");
  c.close(rec.rhs_value().real() * k, rhs, "identity right side times cbrt(2)");
  std::vector<FieldElement> expect{fe("(1-sqrt(3))/2"), fe("sqrt(3)-1"), fe("2+sqrt(3)")};
  std::vector<FieldElement> got;
  for (const auto& r : rec.roots)
    if (r.kind == RootLabel::Kind::Exact) got.push_back(r.exact);
  c.exact(got == expect, "exact roots");
  return c.finish("sqrt3-rsc", "cbrt(2sqrt3-2) - cbrt(sqrt3-1) + cbrt(2sqrt3+4) = sqrt3 cbrt(1 + sqrt3 (cbrt4 - 1))");
}

FixtureResult cos36(const Env& e) {
  Checker c(e.ctx);
  c.small(e.rt(6) * 2 * e.cs(11, 36) + e.n(6) * e.cs(10, 36) - (e.rt(2) * 3 + e.rt(6)) * e.cs(1, 36), "printed");
  const TrigExpr printed = TrigExpr::cos_pi(Rational(11, 36), fe("2*sqrt(6)")) +
                           TrigExpr::cos_pi(Rational(10, 36), FieldElement(6)) -
                           TrigExpr::cos_pi(Rational(1, 36), fe("3*sqrt(2)+sqrt(6)"));
  const auto r = cos_pipeline(72, 1, e.ctx);
  c.exact(r.factor.has_value(), "exact factor for n = 72");
  c.exact(proportional_relation(r.relations, printed), "pipeline relation");
  c.small(printed.value(e.ctx), "normal form");
  return c.finish("cos36", "2sqrt6 cos(11pi/36) + 6cos(10pi/36) = (3sqrt2+sqrt6) cos(pi/36)");
}

FixtureResult cos26(const Env& e) {
  Checker c(e.ctx);
  const BigReal v = (e.fe("-5+sqrt(13)") + sqrt(e.fe("26-6*sqrt(13)")) * 2 * e.cs(1, 26)) / 2;
  const ExactCubic f = parse_cubic("1,1,-4,1");
  c.small(verify_value_is_root(BigComplex(v), f, e.ctx), "root residual");
  const auto r = cos_pipeline(52, 1, e.ctx);
  c.exact(r.rsc.has_value() && *r.rsc == f, "pipeline image for n = 52");
  return c.finish("cos26", "(-5 + sqrt13 + 2sqrt(26-6sqrt13) cos(pi/26))/2 is a root of x^3 + x^2 - 4x + 1");
}

FixtureResult e3(const Env& e) {
  Checker c(e.ctx);
  BigReal lhs(0, e.ctx.bits());
  for (long k : {1L, 11L, 13L}) lhs += cbrt(e.n(2) + e.rt(3) * 2 * e.cs(k, 18));
  c.close(lhs, cbrt(e.n(9)), "printed sides");
  const auto r = cos_pipeline(36, 1, e.ctx);
  c.exact(r.factor && r.factor->cubic == parse_cubic("1,0,-3,-sqrt(3)"), "factor x^3 - 3x - sqrt3");
  const auto& id = r.identity;
  c.exact(id.exact_a == FieldElement(2) && id.exact_c == fe("-sqrt(3)") && id.exact_B == FieldElement(9),
          "a = 2, c = -sqrt3, B = 9");
  c.exact(r.rsc && *r.rsc == parse_cubic("1,-6,3,1"), "image x^3 - 6x^2 + 3x + 1");
  const std::string text = render(id, Format::Text);
  c.exact(text.ends_with("= 9^(1/3)"), "rendering");
  c.close(id.lhs_sum().real(), cbrt(e.n(9)), "identity sum");
  return c.finish("cbrt9", "cbrt(2 + 2sqrt3 cos(pi/18)) + cbrt(2 + 2sqrt3 cos(11pi/18)) + cbrt(2 + 2sqrt3 cos(13pi/18)) = cbrt(9)");
}

FixtureResult cos18(const Env& e) {
  Checker c(e.ctx);
  c.small(e.cs(5, 18) - e.cs(1, 18) * 2 + e.rt(3) * e.cs(4, 18), "printed");
  c.small(e.cs(1, 18) * 2 + e.cs(13, 18) + e.rt(3) * e.cs(14, 18), "intermediate form");
  const BigReal x1 = e.n(2) + e.rt(3) * 2 * e.cs(1, 18);
  c.close(e.n(2) + e.rt(3) * 2 * e.cs(13, 18), e.n(1) / (e.n(1) - x1), "root permutation");
  const TrigExpr printed = TrigExpr::cos_pi(Rational(5, 18), FieldElement(1)) -
                           TrigExpr::cos_pi(Rational(1, 18), FieldElement(2)) +
                           TrigExpr::cos_pi(Rational(4, 18), fe("sqrt(3)"));
  c.exact(proportional_relation(cos_pipeline(36, 1, e.ctx).relations, printed), "pipeline relation");
  return c.finish("cos18", "cos(5pi/18) = 2cos(pi/18) - sqrt3 cos(4pi/18)");
}

FixtureResult cc2(const Env& e) {
  Checker c(e.ctx);
  c.small((e.rt(3) - e.rt(7)) * e.cs(1, 42) - e.rt(7) * 2 * e.cs(25, 42) - e.n(8) * e.cs(1, 42) * e.cs(25, 42) -
              e.n(3),
          "printed");
  const TrigExpr printed = TrigExpr::cos_pi(Rational(1, 42), fe("sqrt(3)-sqrt(7)")) -
                           TrigExpr::cos_pi(Rational(25, 42), fe("2*sqrt(7)")) -
                           TrigExpr::cos_pi(Rational(1, 42), FieldElement(8)) *
                               TrigExpr::cos_pi(Rational(25, 42), FieldElement(1)) -
                           TrigExpr(FieldElement(3));
  const auto r = cos_pipeline(84, 1, e.ctx);
  c.exact(r.factor.has_value(), "exact factor for n = 84");
  c.exact(proportional_relation(r.relations, printed), "pipeline relation");
  return c.finish("cc2", "(sqrt3 - sqrt7) cos(pi/42) - 2sqrt7 cos(25pi/42) - 8cos(pi/42)cos(25pi/42) = 3");
}

FixtureResult sqrt21(const Env& e) {
  Checker c(e.ctx);
  const BigReal base = e.fe("3-sqrt(21)");
  BigReal lhs(0, e.ctx.bits());
  for (long k : {2L, 8L, 10L}) lhs += cbrt(base + e.n(8) * e.cs(k, 21));
  const BigReal rhs = cbrt(e.fe("-1-sqrt(21)") + e.n(6) * cbrt(e.fe("28-4*sqrt(21)")));
  c.close(lhs, rhs, "printed sides");
  const auto r = cos_pipeline(21, 1, e.ctx);
  c.exact(r.minpoly.to_string() == "x^6 - x^5 - 6x^4 + 6x^3 + 8x^2 - 8x + 1", "minimal polynomial");
  c.exact(r.factor && r.factor->cubic == parse_cubic("1,(-1-sqrt(21))/2,(sqrt(21)-1)/2,(sqrt(21)-5)/2"), "factor");
  c.exact(r.root_k == std::array<long, 3>{1, 4, 5}, "roots 2cos(2pi/21), 2cos(8pi/21), 2cos(10pi/21)");
  const auto& id = r.identity;
  c.exact(id.exact_a == fe("(3-sqrt(21))/2") && id.exact_c == FieldElement(-2) && id.exact_B == fe("8-sqrt(21)"),
          "a, c, B");
  const BigReal k = cbrt(e.n(2));
  c.close(id.lhs_sum().real() * k, lhs, "identity sum times cbrt(2)");
  c.close(id.rhs_value().real() * k, rhs, "identity right side times cbrt(2)");
  return c.finish("sqrt21", "sum of cbrt(3 - sqrt21 + 8cos(k pi/21)), k = 2, 8, 10, = cbrt(-1 - sqrt21 + 6cbrt(28 - 4sqrt21))");
}

FixtureResult periods(const Env& e) {
  Checker c(e.ctx);
  const ExactCubic f9 = parse_cubic("1,-6,3,1"), f13 = parse_cubic("1,1,-4,1");
  const std::array<std::array<long, 2>, 3> nine{{{1, 2}, {4, 7}, {5, 8}}};
  for (const auto& p : nine) {
    const BigReal v = e.n(2) + e.cs(p[0], 9) * 2 + e.cs(p[1], 9) * 2;
    c.small(verify_value_is_root(BigComplex(v), f9, e.ctx), "period sum mod 9");
  }
  const std::array<std::array<long, 2>, 3> thirteen{{{2, 10}, {4, 6}, {8, 12}}};
  for (const auto& p : thirteen) {
    const BigReal v = e.cs(p[0], 13) * 2 + e.cs(p[1], 13) * 2;
    c.small(verify_value_is_root(BigComplex(v), f13, e.ctx), "period sum mod 13");
  }
  c.close(e.fe("-5+sqrt(13)") + sqrt(e.fe("26-6*sqrt(13)")) * 2 * e.cs(1, 26),
          e.cs(4, 13) * 4 + e.cs(6, 13) * 4, "sqrt13 identity");
  c.close(e.n(2) + e.rt(3) * 2 * e.cs(1, 18), e.n(2) + e.cs(1, 9) * 2 + e.cs(2, 9) * 2, "triviality");
  return c.finish("periods", "period sums are roots of x^3 - 6x^2 + 3x + 1 and x^3 + x^2 - 4x + 1");
}

FixtureResult arctan_example(const Env& e) {
  Checker c(e.ctx);
  const FieldElement r1(1), r2 = fe("sqrt(2)"), r3 = fe("-sqrt(3)");
  const ExactCubic f{-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -(r1 * r2 * r3)};
  const auto shift = classify_and_shift_exact(f, e.ctx);
  const auto* rs = std::get_if<RamanujanShift<FieldElement>>(&shift);
  const FieldElement B = fe("-6-sqrt(2)-5*sqrt(3)+sqrt(6)");
  c.exact(rs != nullptr && rs->B == B, "B");
  const FieldElement root = fe("-1-sqrt(2)-sqrt(3)-sqrt(6)");
  c.exact(rsc_from_B(B, e.ctx).eval(root).is_zero(), "root of p_B");
  const BigReal b = embed(B, e.ctx);
  const BigReal at = atan(e.rt(3) * 3 / b);
  const BigReal trig =
      ((e.n(3) + b) / 2 + sqrt(e.n(27) + b * b) * cos(at / 3 - pi(e.ctx.bits()))) / 3;
  c.close(trig, embed(root, e.ctx), "trigonometric root");
  c.close(e.fe("3+5*sqrt(2)+sqrt(3)+7*sqrt(6)"),
          sqrt(e.fe("73-9*sqrt(2)+28*sqrt(3)-sqrt(6)") * 2) * 2 * cos(at / 3), "arctan form");
  return c.finish("arctan", "3 + 5sqrt2 + sqrt3 + 7sqrt6 = 2sqrt(2(73 - 9sqrt2 + 28sqrt3 - sqrt6)) cos(arctan(3sqrt3/B)/3)");
}

}  // namespace

std::vector<FixtureResult> reference_fixtures(const PrecisionContext& ctx) {
  const Env env{ctx};
  using Fixture = std::pair<const char*, std::function<FixtureResult(const Env&)>>;
  const std::vector<Fixture> all{{"ninths", ninths},   {"cos-ninths", cos_ninths}, {"sqrt3-rsc", sqrt3_example},
                                 {"cos36", cos36},     {"cos26", cos26},           {"cbrt9", e3},
                                 {"cos18", cos18},     {"cc2", cc2},               {"sqrt21", sqrt21},
                                 {"periods", periods}, {"arctan", arctan_example}};
  std::vector<FixtureResult> out;
  for (const auto& [name, f] : all) {
    try {
      out.push_back(f(env));
    } catch (const Error& err) {
      out.push_back({name, "", BigReal(1, ctx.bits()), false, err.what()});
    }
  }
  return out;
}

}  // namespace rsc
