#pragma once

#include <mpfr.h>

#include <array>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "rsc/numerics/rational.hpp"

namespace rsc {

/// Arbitrary-precision real number; RAII wrapper over an mpfr_t.
/// Every value carries its own precision. Binary operations produce a
/// result at the larger of the two operand precisions.
class BigReal {
 public:
  static constexpr long kDefaultBits = 256;

  BigReal() : BigReal(kDefaultBits) {}
  explicit BigReal(long bits);
  BigReal(long value, long bits);
  BigReal(const Rational& value, long bits);
  BigReal(const mpz_class& value, long bits);
  static BigReal from_double(double value, long bits);
  /// Decimal (or "@nan@"-free mpfr) notation, e.g. "-1.25e-3".
  static BigReal parse(std::string_view text, long bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Nearest integer (ties away from zero).
  mpz_class round_to_integer() const;
  /// log2|x|, or -infinity for zero.
  double log2_abs() const;

  /// Shortest decimal string that reads back to the same value at this precision.
  std::string to_string() const;
  /// Fixed number of significant decimal digits.
  std::string to_string(int digits) const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);
  BigReal& operator*=(long o);
  BigReal& operator/=(long o);

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator*(long b, BigReal a) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

 private:
  mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const BigReal& x);

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal cbrt(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal atan(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
BigReal pi(long bits);
/// 2^exponent
BigReal pow2(long exponent, long bits);
/// cos(q*pi) for rational q.
BigReal cos_pi(const Rational& q, long bits);

/// Complex number as a pair of BigReal.
class BigComplex {
 public:
  BigComplex() : BigComplex(BigReal::kDefaultBits) {}
  explicit BigComplex(long bits) : re_(bits), im_(bits) {}
  explicit BigComplex(const BigReal& re) : re_(re), im_(re.precision()) {}
  BigComplex(const BigReal& re, const BigReal& im) : re_(re), im_(im) {}
  BigComplex(long value, long bits) : re_(value, bits), im_(bits) {}
  BigComplex(const Rational& value, long bits) : re_(value, bits), im_(bits) {}
  static BigComplex unit_root(unsigned k, unsigned n, long bits);  // e^{2 pi i k / n}

  const BigReal& real() const { return re_; }
  const BigReal& imag() const { return im_; }
  long precision() const;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(long o);
  BigComplex& operator/=(long o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, long b) { return a *= b; }
  friend BigComplex operator*(long b, BigComplex a) { return a *= b; }
  friend BigComplex operator/(BigComplex a, long b) { return a /= b; }
  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::string to_string() const;

 private:
  BigReal re_;
  BigReal im_;
};

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

BigReal abs(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigComplex conj(const BigComplex& z);
/// Nonnegative real part; positive imaginary part when the real part is 0.
BigComplex principal_sqrt(const BigComplex& z);
/// Principal root first, then times omega, then times omega^2, omega = e^{2 pi i/3}.
/// For positive real input the principal root is the real one.
std::array<BigComplex, 3> cube_roots(const BigComplex& z);

/// Working precision and comparison tolerance, passed explicitly to every
/// numerical operation.
class PrecisionContext {
 public:
  explicit PrecisionContext(long bits = BigReal::kDefaultBits);
  PrecisionContext(long bits, BigReal tolerance);

  long bits() const { return bits_; }
  const BigReal& tolerance() const { return tolerance_; }

  BigReal real(long value) const { return BigReal(value, bits_); }
  BigReal real(const Rational& value) const { return BigReal(value, bits_); }
  BigComplex complex(long value) const { return BigComplex(value, bits_); }

  bool negligible(const BigReal& x) const { return abs(x) < tolerance_; }
  bool negligible(const BigComplex& z) const { return abs(z) < tolerance_; }

 private:
  long bits_;
  BigReal tolerance_;
};

}  // namespace rsc
