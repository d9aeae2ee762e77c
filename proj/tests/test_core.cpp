#include <random>

#include "doctest.h"
#include "rsc/core/cubic.hpp"
#include "rsc/core/mobius.hpp"
#include "rsc/core/serret.hpp"
#include "rsc/roots.hpp"
#include "test_support.hpp"

using namespace rsc;
using rsc::testing::q;
using rsc::testing::sqrt_fe;

namespace {

const PrecisionContext ctx(256);

ExactCubic cubic(long P, long Q, long R) { return {q(P), q(Q), q(R)}; }

// Discriminant oracle: -Res(f, f') from the 5x5 Sylvester determinant.
Rational sylvester_discriminant(const Rational& P, const Rational& Q, const Rational& R) {
  using Row = std::vector<Rational>;
  std::vector<Row> m{{1, P, Q, R, 0},
                     {0, 1, P, Q, R},
                     {3, P * Rational(2), Q, 0, 0},
                     {0, 3, P * Rational(2), Q, 0},
                     {0, 0, 3, P * Rational(2), Q}};
  Rational det(1);
  for (std::size_t col = 0; col < 5; ++col) {
    std::size_t pivot = col;
    while (pivot < 5 && m[pivot][col].is_zero()) ++pivot;
    if (pivot == 5) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    for (std::size_t r = col + 1; r < 5; ++r) {
      Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < 5; ++k) m[r][k] = m[r][k] - f * m[col][k];
    }
  }
  return -det;
}

MobiusMap<BigComplex> numeric_map(const SerretData<FieldElement>& s) {
  return {embed_complex(s.a, ctx), embed_complex(s.b, ctx), embed_complex(s.c, ctx), embed_complex(s.d, ctx)};
}

}  // namespace

TEST_CASE("discriminant examples match the resultant oracle") {
  CHECK(discriminant(cubic(0, -3, 1)) == q(81));
  CHECK(discriminant(cubic(0, -1, 0)) == q(4));
  CHECK(discriminant(cubic(0, 0, 0)) == q(0));
  CHECK(sylvester_discriminant(0, -3, 1) == Rational(81));
  CHECK(sylvester_discriminant(0, -1, 0) == Rational(4));

  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    ExactCubic f = testing::random_rational_cubic(rng);
    CHECK(discriminant(f).as_rational() ==
          sylvester_discriminant(f.P.as_rational(), f.Q.as_rational(), f.R.as_rational()));
  }
}

TEST_CASE("serret invariants") {
  auto s = serret_invariants(cubic(0, -1, 0), ctx);
  CHECK(s.delta == q(4));
  CHECK(s.sqrt_delta == q(2));
  CHECK(s.a == q(1, 2));
  CHECK(s.b == q(1, 2));
  CHECK(s.c == q(-3, 2));
  CHECK(s.d == q(1, 2));

  auto t = serret_invariants(cubic(0, -3, 1), ctx);
  CHECK(t.sqrt_delta == q(9));
  CHECK(t.a == q(0));
  CHECK(t.c == q(-1));

  auto u = serret_invariants(ExactCubic{q(0), q(-3), -sqrt_fe(3)}, ctx);
  CHECK(u.a == q(2));
  CHECK(u.c == -sqrt_fe(3));

  CHECK_THROWS_AS(serret_invariants(cubic(0, 0, 0), ctx), Error);
  try {
    (void)serret_invariants(cubic(-2, 1, 0), ctx);  // x(x-1)^2
    FAIL("expected RepeatedRoots");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RepeatedRoots);
  }
}

TEST_CASE("serret for a non-square rational discriminant adjoins its kernel") {
  // x^3 - 2 has discriminant -108 = -3 * 6^2
  auto s = serret_invariants(cubic(0, 0, -2), ctx);
  CHECK(s.sqrt_delta == q(6) * sqrt_fe(-3));
  CHECK(s.a * s.d - s.b * s.c == q(1));
}

TEST_CASE("mobius examples") {
  auto n = MobiusMap<FieldElement>::rsc_cycle(ctx);
  CHECK(mobius_order(n, 10, ctx) == 3);
  CHECK(mobius_order(MobiusMap<FieldElement>::identity(ctx), 10, ctx) == 1);

  using E = Extended<FieldElement>;
  auto at_inf = mobius_apply(n, E::infinity(), ctx);
  CHECK_FALSE(at_inf.infinite);
  CHECK(at_inf.value == q(0));
  CHECK(mobius_apply(n, q(0), ctx) == q(1));
  CHECK(mobius_apply(n, E::finite(q(1)), ctx).infinite);
  CHECK_THROWS_AS(mobius_apply(n, q(1), ctx), Error);

  MobiusMap<FieldElement> m{q(1, 2), q(1, 2), q(-3, 2), q(1, 2)};
  CHECK(mobius_apply(m, q(0), ctx) == q(1));
  CHECK(mobius_apply(m, q(1), ctx) == q(-1));
  CHECK(mobius_apply(m, q(-1), ctx) == q(0));
  CHECK(mobius_order(m, 10, ctx) == 3);

  auto nn = MobiusMap<BigComplex>::rsc_cycle(ctx);
  CHECK(mobius_order(nn, 10, ctx) == 3);
}

TEST_CASE("ramanujan simple cubic construction and detection") {
  ExactCubic p0 = rsc_from_B(q(0), ctx);
  CHECK(p0.P == q(-3, 2));
  CHECK(p0.Q == q(-3, 2));
  CHECK(p0.R == q(1));
  CHECK(to_string(p0) == "x^3 - 3/2x^2 - 3/2x + 1");

  CHECK(rsc_detect(cubic(-6, 3, 1), ctx) == q(9));
  CHECK(rsc_detect(cubic(1, -4, 1), ctx) == q(-5));
  ExactCubic pm5 = rsc_from_B(q(-5), ctx);
  CHECK(pm5.P == q(1));
  CHECK(pm5.Q == q(-4));
  CHECK(pm5.R == q(1));
  CHECK_FALSE(rsc_detect(cubic(0, -1, 0), ctx).has_value());
  CHECK_FALSE(rsc_detect(cubic(1, -4, 2), ctx).has_value());
}

TEST_CASE("eval examples") {
  CHECK(cubic(0, -1, 0).eval(q(1)) == q(0));
  CHECK(rsc_from_B(q(0), ctx).eval(q(2)) == q(0));

  // (-5 + sqrt13 + 2 sqrt(26 - 6 sqrt13) cos(pi/26)) / 2
  BigReal s13 = sqrt(BigReal(13, 256));
  BigReal v = (BigReal(-5, 256) + s13 + BigReal(2, 256) * sqrt(BigReal(26, 256) - BigReal(6, 256) * s13) *
                                             cos_pi(Rational(1, 26), 256)) /
              BigReal(2, 256);
  NumericCubic f = to_numeric(cubic(1, -4, 1), ctx);
  BigComplex value = f.eval(BigComplex(v));
  CHECK(abs(value) < pow2(-200, 256));
}

TEST_CASE("property: ad - bc = 1 and d = 1 - a exactly") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    ExactCubic f = testing::random_rational_cubic(rng);
    if (discriminant(f).is_zero()) continue;
    auto s = serret_invariants(f, ctx);
    CHECK(s.a * s.d - s.b * s.c == q(1));
    CHECK(s.d == q(1) - s.a);
    CHECK(s.sqrt_delta * s.sqrt_delta == s.delta);
    ++checked;
  }
  CHECK(checked > 250);
}

TEST_CASE("property: the Serret map permutes the roots (1000 rational cubics)") {
  std::mt19937_64 rng(1000);
  int checked = 0;
  while (checked < 1000) {
    ExactCubic f = testing::random_rational_cubic(rng);
    if (discriminant(f).is_zero()) continue;
    auto s = serret_invariants(f, ctx);
    auto roots = solve_numeric(f, ctx);
    Permutation perm = permutation_under(numeric_map(s), roots, ctx);
    CHECK(perm.cycle_type() == std::vector<int>{3});
    ++checked;
  }
}

TEST_CASE("property: flipping sqrt(Delta) sends a to 1 - a and c to -c") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    ExactCubic f = testing::random_rational_cubic(rng);
    if (discriminant(f).is_zero()) continue;
    auto s = serret_invariants(f, ctx);
    auto t = serret_from_sqrt(f, s.delta, -s.sqrt_delta, ctx);
    CHECK(t.a == q(1) - s.a);
    CHECK(t.c == -s.c);
    CHECK(t.a * 6 + t.c * f.P * 2 - q(3) == -(s.a * 6 + s.c * f.P * 2 - q(3)));
  }
}

TEST_CASE("property: discriminant of p_B and the reflection identity") {
  std::mt19937_64 rng(23);
  const Poly<FieldElement> one_minus_x({q(1), q(-1)});
  for (int i = 0; i < 100; ++i) {
    FieldElement B(testing::random_rational(rng, 100, 7));
    FieldElement expected = (q(27) + B * B) / q(4);
    CHECK(discriminant(rsc_from_B(B, ctx)) == expected * expected);
    auto lhs = rsc_from_B(-B, ctx).to_poly(ctx);
    auto rhs = -rsc_from_B(B, ctx).to_poly(ctx).compose(one_minus_x);
    CHECK(poly_equal(lhs, rhs, ctx));
    CHECK(rsc_detect(rsc_from_B(B, ctx), ctx) == B);
  }
}

TEST_CASE("property: rsc_detect iff R = 1 and P + Q = -3") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> small(-3, 3);
  for (int i = 0; i < 300; ++i) {
    ExactCubic f = cubic(small(rng), small(rng), small(rng) > 0 ? 1 : small(rng));
    const bool condition = f.R == q(1) && f.P + f.Q == q(-3);
    CHECK(rsc_detect(f, ctx).has_value() == condition);
  }
}
