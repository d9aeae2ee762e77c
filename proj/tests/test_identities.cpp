#include <random>

#include "doctest.h"
#include "rsc/identities.hpp"
#include "rsc/parse.hpp"
#include "rsc/transform.hpp"
#include "test_support.hpp"

using namespace rsc;
using rsc::testing::q;
using rsc::testing::sqrt_fe;

namespace {

const PrecisionContext ctx(256);

BigReal num(long v) { return BigReal(v, ctx.bits()); }

std::array<RootLabel, 3> cos_labels(long a, long b, long c, long den) {
  return {RootLabel::two_cos(Rational(a, den)), RootLabel::two_cos(Rational(b, den)),
          RootLabel::two_cos(Rational(c, den))};
}

void check_holds(const IdentityRecord& rec) {
  CHECK(ctx.negligible(abs(rec.lhs_sum() - rec.rhs_value())));
  CHECK(rec.residual_log2 < -128);
}

}  // namespace

TEST_CASE("ninths identity after scaling by cbrt(2/9)") {
  const auto rec = build_identity(rsc_from_B(q(0), ctx), ctx);
  check_holds(rec);
  CHECK(rec.all_real);
  CHECK(render(rec, Format::Text, {q(2, 9)}) == "(1/9)^(1/3) + (4/9)^(1/3) - (2/9)^(1/3) = (-1 + 2^(1/3))^(1/3)");
  // Oracle: the printed sides evaluated directly.
  const BigReal lambda = cbrt(BigReal(Rational(2, 9), ctx.bits()));
  const BigReal printed = cbrt(cbrt(num(2)) - num(1));
  CHECK(ctx.negligible(rec.lhs_sum().real() * lambda - printed));
}

TEST_CASE("cos(pi/9) identity after dividing by cbrt(2)") {
  const auto rec = build_identity(rsc_from_B(q(-3), ctx), ctx, cos_labels(2, 4, 8, 9));
  check_holds(rec);
  const std::string text = render(rec, Format::Text, {q(1, 2)});
  CHECK(text == "(cos(2pi/9))^(1/3) + (cos(4pi/9))^(1/3) - (cos(pi/9))^(1/3) = (-3 + 3/2*9^(1/3))^(1/3)");
  const BigReal printed = cbrt(BigReal(Rational(3, 2), ctx.bits()) * (cbrt(num(9)) - num(2)));
  CHECK(ctx.negligible(rec.rhs_value().real() / cbrt(num(2)) - printed));
}

TEST_CASE("cube roots of 2 + 2sqrt3 cos sum to cbrt(9)") {
  const auto rec = build_identity(parse_cubic("1,0,-3,-sqrt(3)"), ctx, cos_labels(1, 11, 13, 18));
  check_holds(rec);
  CHECK(*rec.exact_B == q(9));
  const std::string text = render(rec, Format::Text);
  CHECK(text ==
        "(2 + 2*sqrt(3)*cos(pi/18))^(1/3) + (2 + 2*sqrt(3)*cos(11pi/18))^(1/3) + "
        "(2 + 2*sqrt(3)*cos(13pi/18))^(1/3) = 9^(1/3)");
  CHECK(text.ends_with("= 9^(1/3)"));
}

TEST_CASE("B = 3sqrt3 identity") {
  const auto rec = build_identity(rsc_from_B(q(3) * sqrt_fe(3), ctx), ctx);
  check_holds(rec);
  // Oracle: the printed right side sqrt3 cbrt(1 + sqrt3 (cbrt4 - 1)) over cbrt 2.
  const BigReal s3 = sqrt(num(3));
  const BigReal printed = s3 * cbrt(num(1) + s3 * (cbrt(num(4)) - num(1)));
  CHECK(ctx.negligible(rec.rhs_value().real() * cbrt(num(2)) - printed));
  CHECK(render(rec, Format::Text, {q(2)}).ends_with("= (-9+3*sqrt(3) + 9*4^(1/3))^(1/3)"));
}

TEST_CASE("latex and json renderings") {
  const auto rec = build_identity(rsc_from_B(q(0), ctx), ctx);
  const std::string tex = render(rec, Format::Latex);
  CHECK(tex.find("\\sqrt[3]{") != std::string::npos);
  CHECK(tex.find("= \\sqrt[3]{-\\frac{9}{2} + \\frac{9}{2} \\sqrt[3]{2}}") != std::string::npos);
  const auto j = to_json(rec);
  CHECK(j["schema"] == 1);
  CHECK(j["source"]["P"] == "-3/2");
  CHECK(j["B"] == "0");
  CHECK(j["lhs_terms"].size() == 3);
  CHECK(j.contains("rhs_radicand"));
  CHECK(j.contains("branches"));
  CHECK(identity_from_json(j) == rec);
  CHECK(identity_from_json(nlohmann::json::parse(j.dump())) == rec);
  CHECK(render(rec, Format::Json) == j.dump(2));
}

TEST_CASE("json rejects malformed records") {
  const auto j = to_json(build_identity(rsc_from_B(q(1), ctx), ctx));
  auto bad = j;
  bad["schema"] = 2;
  CHECK_THROWS_AS(identity_from_json(bad), ParseError);
  bad = j;
  bad.erase("branches");
  CHECK_THROWS_AS(identity_from_json(bad), ParseError);
}

TEST_CASE("complex branches for a cubic with complex roots") {
  const auto rec = build_identity(parse_cubic("1,0,-1,1"), ctx);
  check_holds(rec);
  CHECK_FALSE(rec.all_real);
  const auto back = identity_from_json(to_json(rec));
  CHECK(back == rec);
}

TEST_CASE("translation cubics have no identity") {
  CHECK_THROWS_AS(build_identity(parse_cubic("1,3,3,2"), ctx), Error);
  try {
    build_identity(parse_cubic("1,0,0,-2"), ctx);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TranslationCase);
  }
}

TEST_CASE("labels must be roots") {
  CHECK_THROWS_AS(build_identity(rsc_from_B(q(-3), ctx), ctx, cos_labels(2, 4, 6, 9)), Error);
}

TEST_CASE("verify_value_is_root") {
  const ExactCubic p0 = rsc_from_B(q(0), ctx);
  const BigComplex zero(0, ctx.bits());
  // |p0(0)| = 1, scaled by max(1, max |coeff|) = 3/2.
  CHECK(abs(to_numeric(p0, ctx).eval(zero)) == num(1));
  CHECK(verify_value_is_root(zero, p0, ctx) == BigReal(Rational(2, 3), ctx.bits()));

  const BigReal s13 = sqrt(num(13));
  const BigReal v = (s13 - num(5) + sqrt(num(26) - s13 * 6) * 2 * cos_pi(Rational(1, 26), ctx.bits())) / 2;
  CHECK(verify_value_is_root(BigComplex(v), parse_cubic("1,1,-4,1"), ctx).log2_abs() < -200);

  // 4cos(4pi/13) + 4cos(6pi/13) + 5 - sqrt13 - 2sqrt(26 - 6sqrt13)cos(pi/26) = 0
  const BigReal lovely = cos_pi(Rational(4, 13), ctx.bits()) * 4 + cos_pi(Rational(6, 13), ctx.bits()) * 4 +
                         num(5) - s13 - sqrt(num(26) - s13 * 6) * 2 * cos_pi(Rational(1, 26), ctx.bits());
  CHECK(ctx.negligible(lovely));
}

TEST_CASE("random rational cubics give identities") {
  std::mt19937_64 rng(31);
  int built = 0;
  while (built < 500) {
    ExactCubic f = rsc::testing::random_rational_cubic(rng);
    if (discriminant(f).is_zero()) continue;
    const auto shift = classify_and_shift_exact(f, ctx);
    if (std::holds_alternative<Translation<FieldElement>>(shift)) continue;
    const auto rec = build_identity(f, ctx);
    check_holds(rec);
    // Branch order: for real B the all-real choice is used.
    if (rec.exact_B && rec.exact_B->is_real()) CHECK(rec.all_real);
    ++built;
  }
}

TEST_CASE("real B always takes the real branches") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const FieldElement B = rsc::testing::random_element(rng, {2}, 60, 7);
    const auto rec = build_identity(rsc_from_B(B, ctx), ctx);
    CHECK(rec.all_real);
    check_holds(rec);
  }
}

TEST_CASE("scaling radicands by lambda^3 scales the sum by lambda") {
  const auto rec = build_identity(rsc_from_B(q(5, 3), ctx), ctx);
  const auto x = rec.lhs_values();
  for (long l : {2L, -3L, 7L}) {
    BigReal scaled(0, ctx.bits()), plain(0, ctx.bits());
    for (const auto& v : x) {
      scaled += cbrt(v.real() * (l * l * l));
      plain += cbrt(v.real());
    }
    CHECK(ctx.negligible((scaled - plain * l) / 64));
  }
}

TEST_CASE("inner radicand is the square root of the discriminant") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const FieldElement B(rsc::testing::random_rational(rng, 50, 9));
    const auto p = rsc_from_B(B, ctx);
    const FieldElement inner = (q(27) + B * B) / q(4);
    CHECK(ctx.negligible(sqrt(embed(discriminant(p), ctx)) - embed(inner, ctx)));
  }
}

TEST_CASE("lhs_term_text") {
  const auto rec = build_identity(parse_cubic("1,0,-3,-sqrt(3)"), ctx, cos_labels(1, 11, 13, 18));
  CHECK(*lhs_term_text(rec, 0) == "2 + 2*sqrt(3)*cos(pi/18)");
  const auto numeric = build_identity(to_numeric(parse_cubic("1,0,-3,1"), ctx), ctx);
  CHECK_FALSE(lhs_term_text(numeric, 0).has_value());
}

TEST_CASE("cosine relation from the root permutation") {
  const auto rec = build_identity(parse_cubic("1,0,-3,-sqrt(3)"), ctx, cos_labels(1, 11, 13, 18));
  const auto rels = mobius_cosine_relations(rec, ctx);
  REQUIRE(rels.size() == 3);
  const TrigExpr cos18 = TrigExpr::cos_pi(Rational(5, 18), q(1)) - TrigExpr::cos_pi(Rational(1, 18), q(2)) +
                         TrigExpr::cos_pi(Rational(4, 18), sqrt_fe(3));
  bool found = false;
  for (const auto& r : rels) {
    CHECK(ctx.negligible(r.relation.value(ctx)));
    found = found || r.relation.ratio_to(cos18).has_value();
  }
  CHECK(found);
}
