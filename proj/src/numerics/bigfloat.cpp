#include "rsc/numerics/bigfloat.hpp"

#include <cmath>
#include <limits>

#include "rsc/error.hpp"

namespace rsc {

namespace {

void raise_to(mpfr_ptr v, mpfr_prec_t prec) {
  if (mpfr_get_prec(v) < prec) mpfr_prec_round(v, prec, MPFR_RNDN);
}

long checked_bits(long bits) {
  if (bits < 2) throw Error(ErrorCode::InvalidArgument, "precision must be at least 2 bits");
  return bits;
}

}  // namespace

BigReal::BigReal(long bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, long bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, long bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_q(value_, value.gmp().get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, long bits) {
  mpfr_init2(value_, checked_bits(bits));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal BigReal::from_double(double value, long bits) {
  BigReal r(bits);
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  return r;
}

BigReal BigReal::parse(std::string_view text, long bits) {
  BigReal r(bits);
  std::string s(text);
  if (mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw Error(ErrorCode::ParseError, "bad real number '" + s + "'");
  return r;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

mpz_class BigReal::round_to_integer() const {
  if (!mpfr_number_p(value_)) throw Error(ErrorCode::NonConvergence, "rounding a non-finite value");
  mpz_class z;
  BigReal r(precision());
  mpfr_round(r.value_, value_);
  mpfr_get_z(z.get_mpz_t(), r.value_, MPFR_RNDN);
  return z;
}

double BigReal::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double mant = mpfr_get_d_2exp(&exp, value_, MPFR_RNDN);
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

std::string BigReal::to_string() const { return to_string(0); }

std::string BigReal::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign_part;
  if (!mant.empty() && mant[0] == '-') {
    sign_part = "-";
    mant.erase(0, 1);
  }
  while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
  std::string out = sign_part + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  long e10 = static_cast<long>(exp) - 1;
  if (e10 != 0) out += "e" + std::to_string(e10);
  return out;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigReal& BigReal::operator+=(const BigReal& o) {
  raise_to(value_, mpfr_get_prec(o.value_));
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  raise_to(value_, mpfr_get_prec(o.value_));
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  raise_to(value_, mpfr_get_prec(o.value_));
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "real division by zero");
  raise_to(value_, mpfr_get_prec(o.value_));
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long o) {
  mpfr_mul_si(value_, value_, o, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long o) {
  if (o == 0) throw Error(ErrorCode::DivisionByZero, "real division by zero");
  mpfr_div_si(value_, value_, o, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.to_string(); }

#define RSC_UNARY(name, fn)                      \
  BigReal name(const BigReal& x) {               \
    BigReal r(x.precision());                    \
    fn(r.get(), x.get(), MPFR_RNDN);             \
    return r;                                    \
  }

RSC_UNARY(abs, mpfr_abs)
RSC_UNARY(sqrt, mpfr_sqrt)
RSC_UNARY(cbrt, mpfr_cbrt)
RSC_UNARY(cos, mpfr_cos)
RSC_UNARY(sin, mpfr_sin)
RSC_UNARY(atan, mpfr_atan)

#undef RSC_UNARY

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r(std::max(x.precision(), y.precision()));
  mpfr_hypot(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

BigReal pi(long bits) {
  BigReal r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigReal pow2(long exponent, long bits) {
  BigReal r(1, bits);
  mpfr_mul_2si(r.get(), r.get(), exponent, MPFR_RNDN);
  return r;
}

BigReal cos_pi(const Rational& q, long bits) {
  // Reduce q modulo 2 exactly so the argument stays small.
  mpz_class two_den = 2 * q.den();
  mpz_class reduced = q.num() % two_den;
  if (reduced < 0) reduced += two_den;
  Rational r(reduced, q.den());
  BigReal angle = pi(bits + 16) * BigReal(r, bits + 16);
  BigReal out(bits);
  mpfr_cos(out.get(), angle.get(), MPFR_RNDN);
  return out;
}

BigComplex BigComplex::unit_root(unsigned k, unsigned n, long bits) {
  BigReal angle = pi(bits + 16) * BigReal(Rational(2L * k, n), bits + 16);
  BigReal c(bits), s(bits);
  mpfr_cos(c.get(), angle.get(), MPFR_RNDN);
  mpfr_sin(s.get(), angle.get(), MPFR_RNDN);
  return {c, s};
}

long BigComplex::precision() const { return std::max(re_.precision(), im_.precision()); }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigReal re = re_ * o.re_ - im_ * o.im_;
  BigReal im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "complex division by zero");
  BigReal den = o.re_ * o.re_ + o.im_ * o.im_;
  BigReal re = (re_ * o.re_ + im_ * o.im_) / den;
  BigReal im = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator*=(long o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

BigComplex& BigComplex::operator/=(long o) {
  re_ /= o;
  im_ /= o;
  return *this;
}

std::string BigComplex::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  return "(" + re_.to_string() + "," + im_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) { return os << z.to_string(); }

BigReal abs(const BigComplex& z) { return hypot(z.real(), z.imag()); }

BigReal arg(const BigComplex& z) {
  if (z.imag().is_zero()) {
    long bits = z.precision();
    return z.real().sign() < 0 ? pi(bits) : BigReal(bits);
  }
  return atan2(z.imag(), z.real());
}

BigComplex conj(const BigComplex& z) { return {z.real(), -z.imag()}; }

BigComplex principal_sqrt(const BigComplex& z) {
  long bits = z.precision();
  if (z.is_zero()) return BigComplex(bits);
  BigReal r = abs(z);
  if (z.real().sign() >= 0) {
    BigReal s = sqrt((r + z.real()) / 2);
    BigReal t = z.imag() / (s * 2);
    return {s, t};
  }
  BigReal t = sqrt((r - z.real()) / 2);
  if (z.imag().sign() < 0) t = -t;
  BigReal s = z.imag() / (t * 2);
  return {s, t};
}

std::array<BigComplex, 3> cube_roots(const BigComplex& z) {
  long bits = z.precision();
  if (z.is_zero()) return {BigComplex(bits), BigComplex(bits), BigComplex(bits)};
  BigComplex principal(bits);
  if (z.imag().is_zero() && z.real().sign() > 0) {
    principal = BigComplex(cbrt(z.real()));
  } else {
    BigReal mod = cbrt(abs(z));
    BigReal theta = arg(z) / 3;
    principal = BigComplex(mod * cos(theta), mod * sin(theta));
  }
  BigComplex omega = BigComplex::unit_root(1, 3, bits);
  BigComplex second = principal * omega;
  BigComplex third = second * omega;
  return {principal, second, third};
}

PrecisionContext::PrecisionContext(long bits)
    : bits_(bits), tolerance_(pow2(-(bits / 2), bits)) {
  if (bits < 64) throw Error(ErrorCode::InvalidArgument, "precision must be at least 64 bits");
}

PrecisionContext::PrecisionContext(long bits, BigReal tolerance) : bits_(bits), tolerance_(std::move(tolerance)) {
  if (bits < 64) throw Error(ErrorCode::InvalidArgument, "precision must be at least 64 bits");
  if (tolerance_.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
}

}  // namespace rsc
