#include "rsc/numerics/rational.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "rsc/error.hpp"

namespace rsc {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  q.canonicalize();
  return Rational(q);
}

mpz_class Rational::height() const {
  mpz_class n = ::abs(value_.get_num());
  mpz_class d = value_.get_den();
  return n > d ? n : d;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(n, d);
}

namespace {

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long offset = 1;; ++offset) {
    mpz_class y = 2, c = offset, g = 1, q = 1, x, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](mpz_class& v) { v = (v * v + c) % n; };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          q = (q * ::abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        g = gcd(::abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  mpz_class root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    std::map<mpz_class, unsigned> half;
    factor_into(root, half);
    for (auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "factorize(0)");
  mpz_class m = ::abs(n);
  std::map<mpz_class, unsigned> found;
  for (unsigned long p = 2; p < 4096 && m > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++found[mpz_class(p)];
      m /= p;
    }
  }
  factor_into(m, found);
  return {found.begin(), found.end()};
}

SquarefreeSplit squarefree_split(const mpz_class& n) {
  if (n == 0) return {0, 0};
  mpz_class root = 1, kernel = sgn(n);
  for (const auto& [p, e] : factorize(n)) {
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2) kernel *= p;
  }
  return {root, kernel};
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

std::optional<Rational> exact_cbrt(const Rational& r) {
  mpz_class n = r.num(), d = r.den(), cn, cd;
  bool neg = n < 0;
  n = ::abs(n);
  if (!mpz_root(cn.get_mpz_t(), n.get_mpz_t(), 3)) return std::nullopt;
  if (!mpz_root(cd.get_mpz_t(), d.get_mpz_t(), 3)) return std::nullopt;
  return Rational(neg ? mpz_class(-cn) : cn, cd);
}

}  // namespace rsc
