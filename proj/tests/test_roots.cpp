#include <random>

#include "doctest.h"
#include "rsc/roots.hpp"
#include "rsc/transform.hpp"
#include "test_support.hpp"

using namespace rsc;
using rsc::testing::q;
using rsc::testing::sqrt_fe;

namespace {

const PrecisionContext ctx(256);

std::vector<BigComplex> values_of(const std::array<TrigRoot, 3>& roots) {
  std::vector<BigComplex> out;
  for (const auto& r : roots) out.emplace_back(r.value);
  return out;
}

std::vector<BigComplex> reals(std::initializer_list<BigReal> xs) {
  std::vector<BigComplex> out;
  for (const auto& x : xs) out.emplace_back(x);
  return out;
}

BigReal R(long n, long d = 1) { return BigReal(Rational(n, d), 256); }
BigReal two_cos(long n, long d) { return R(2) * cos_pi(Rational(n, d), 256); }

}  // namespace

TEST_CASE("rsc_trig_roots examples") {
  auto r0 = rsc_trig_roots(R(0), ctx);
  CHECK(multiset_distance(values_of(r0), reals({R(-1), R(1, 2), R(2)})) < ctx.tolerance());
  CHECK(r0[0].k % 2 == 0);

  auto r3 = rsc_trig_roots(R(-3), ctx);
  CHECK(multiset_distance(values_of(r3), reals({two_cos(2, 9), two_cos(4, 9), -two_cos(1, 9)})) <
        ctx.tolerance());
  for (const auto& t : r3) CHECK(t.k % 2 == 1);
  // the k = 1 angle for B = -3 is 2pi/9
  CHECK(r3[0].k == 1);
  CHECK(abs(r3[0].angle - pi(256) * R(2, 9)) < ctx.tolerance());

  auto r9 = rsc_trig_roots(R(9), ctx);
  auto direct = solve_numeric(ExactCubic{q(-6), q(3), q(1)}, ctx);
  CHECK(multiset_distance(values_of(r9), direct) < ctx.tolerance());
  BigReal largest = r9[0].value;
  for (const auto& t : r9) largest = t.value > largest ? t.value : largest;
  CHECK(abs(largest - (R(2) + R(2) * sqrt(R(3)) * cos_pi(Rational(1, 18), 256))) < ctx.tolerance());
}

TEST_CASE("cubic_trig_roots examples") {
  auto u = cubic_trig_roots(ExactCubic{q(0), q(-1), q(0)}, ctx);
  CHECK(multiset_distance(values_of(u), reals({R(0), R(1), R(-1)})) < ctx.tolerance());

  // x^3 + x^2 - 4x + 1 has the cos(pi/26) root
  BigReal s13 = sqrt(R(13));
  BigReal v = (R(-5) + s13 + R(2) * sqrt(R(26) - R(6) * s13) * cos_pi(Rational(1, 26), 256)) / R(2);
  auto w = cubic_trig_roots(ExactCubic{q(1), q(-4), q(1)}, ctx);
  bool found = false;
  for (const auto& t : w) found = found || abs(t.value - v) < ctx.tolerance();
  CHECK(found);

  CHECK_THROWS_AS(cubic_trig_roots(ExactCubic{q(3), q(3), q(2)}, ctx), Error);
  try {
    (void)cubic_trig_roots(ExactCubic{q(0), q(-1), q(1)}, ctx);  // negative discriminant
    FAIL("expected NonRealShift");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonRealShift);
  }
}

TEST_CASE("cubic_trig_roots on (x-1)(x-sqrt2)(x+sqrt3)") {
  const FieldElement r1 = q(1), r2 = sqrt_fe(2), r3 = -sqrt_fe(3);
  ExactCubic f{-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -(r1 * r2 * r3)};
  auto u = cubic_trig_roots(f, ctx);
  CHECK(multiset_distance(values_of(u), reals({embed(r1, ctx), embed(r2, ctx), embed(r3, ctx)})) <
        ctx.tolerance());

  // one Ramanujan root a - c t is -1 - sqrt2 - sqrt3 - sqrt6
  auto shift = std::get<RamanujanShift<FieldElement>>(classify_and_shift_exact(f, ctx));
  const FieldElement target = q(-1) - sqrt_fe(2) - sqrt_fe(3) - sqrt_fe(6);
  bool found = false;
  for (const auto& t : {r1, r2, r3}) found = found || to_rsc_root(t, shift) == target;
  CHECK(found);
}

TEST_CASE("solve_numeric examples") {
  auto one = solve_numeric(ExactCubic{q(0), q(0), q(-1)}, ctx);
  BigComplex w = BigComplex::unit_root(1, 3, 256);
  std::vector<BigComplex> expected{BigComplex(1, 256), w, w * w};
  CHECK(multiset_distance(one, expected) < ctx.tolerance());

  auto p0 = solve_numeric(rsc_from_B(q(0), ctx), ctx);
  CHECK(multiset_distance(p0, reals({R(-1), R(1, 2), R(2)})) < ctx.tolerance());
  // sorted by real part
  CHECK(p0[0].real() < p0[1].real());
  CHECK(p0[1].real() < p0[2].real());

  auto c2 = solve_numeric(ExactCubic{q(0), q(0), q(-2)}, ctx);
  bool found = false;
  for (const auto& z : c2) found = found || abs(z - BigComplex(cbrt(R(2)))) < ctx.tolerance();
  CHECK(found);
  CHECK(std::fabs(cbrt(R(2)).to_double() - 1.2599210498948732) < 1e-15);

  // repeated roots are allowed
  auto triple = solve_numeric(ExactCubic{q(-3), q(3), q(-1)}, ctx);
  CHECK(multiset_distance(triple, reals({R(1), R(1), R(1)})) < ctx.tolerance());
}

TEST_CASE("permutation_under examples") {
  auto n = MobiusMap<BigComplex>::rsc_cycle(ctx);
  auto p0 = reals({R(-1), R(1, 2), R(2)});
  Permutation perm = permutation_under(n, p0, ctx);
  CHECK(perm.sigma == std::vector<int>{1, 2, 0});
  CHECK(perm.cycles() == "(0 1 2)");

  BigReal s3 = sqrt(R(3));
  auto ex2 = reals({s3 - R(1), R(2) + s3, (R(1) - s3) / R(2)});
  CHECK(permutation_under(n, ex2, ctx).cycle_type() == std::vector<int>{3});

  Permutation id = permutation_under(MobiusMap<BigComplex>::identity(ctx), ex2, ctx);
  CHECK(id.is_identity());
  CHECK(id.cycles() == "()");

  CHECK_THROWS_AS(permutation_under(n, reals({R(3), R(5), R(7)}), ctx), Error);
}

TEST_CASE("property: trig roots agree with the generic solver for 500 random B") {
  std::mt19937_64 rng(500);
  std::uniform_real_distribution<double> dist(-100.0, 100.0);
  for (int i = 0; i < 500; ++i) {
    BigReal B = BigReal::from_double(dist(rng), 256);
    auto trig = rsc_trig_roots(B, ctx);
    NumericCubic f = rsc_from_B(BigComplex(B), ctx);
    CHECK(multiset_distance(values_of(trig), solve_numeric(f, ctx)) < ctx.tolerance());
  }
}

TEST_CASE("property: continuity at B = 0") {
  const auto limit = reals({R(-1), R(1, 2), R(2)});
  for (long sign : {1L, -1L}) {
    BigReal B = R(sign) * BigReal::parse("1e-8", 256);
    BigReal d = multiset_distance(values_of(rsc_trig_roots(B, ctx)), limit);
    CHECK(d < BigReal::parse("1e-7", 256));
    CHECK(d > BigReal::parse("1e-10", 256));
  }
}

TEST_CASE("property: cubic_trig_roots matches solve_numeric on random real cubics") {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 200) {
    ExactCubic f = testing::random_rational_cubic(rng);
    Rational delta = discriminant(f).as_rational();
    // real shift needs a positive discriminant and c != 0
    if (delta.sign() <= 0 || f.Q * 3 == f.P * f.P) continue;
    auto trig = cubic_trig_roots(f, ctx);
    CHECK(multiset_distance(values_of(trig), solve_numeric(f, ctx)) < ctx.tolerance() * BigReal(1000, 256));
    ++checked;
  }
}

TEST_CASE("property: n permutes the roots of every p_B") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  auto n = MobiusMap<BigComplex>::rsc_cycle(ctx);
  for (int i = 0; i < 100; ++i) {
    BigComplex B(BigReal::from_double(dist(rng), 256), BigReal::from_double(i % 2 ? dist(rng) : 0.0, 256));
    auto roots = solve_numeric(rsc_from_B(B, ctx), ctx);
    CHECK(permutation_under(n, roots, ctx).cycle_type() == std::vector<int>{3});
  }
}

TEST_CASE("consequence: cos(5pi/18) = 2cos(pi/18) - sqrt3 cos(4pi/18)") {
  BigReal lhs = cos_pi(Rational(5, 18), 256);
  BigReal rhs = R(2) * cos_pi(Rational(1, 18), 256) - sqrt(R(3)) * cos_pi(Rational(4, 18), 256);
  CHECK(abs(lhs - rhs) < ctx.tolerance());
}
