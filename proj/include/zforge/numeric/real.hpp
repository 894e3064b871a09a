#pragma once

#include <compare>
#include <string>

#include <mpfr.h>

#include "zforge/exact/rational.hpp"

namespace zforge::numeric {

/// Arbitrary-precision binary floating value backed by MPFR.
///
/// Each value carries its own precision; binary operations produce the
/// larger of the two operand precisions. There is no global precision
/// state. Operations that would produce an infinity or NaN throw
/// PrecisionError.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 64);
  Real(double value, mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_long(long value, mpfr_prec_t bits);
  static Real from_rational(const exact::Rational& value, mpfr_prec_t bits);
  static Real from_integer(const exact::Integer& value, mpfr_prec_t bits);
  /// Decimal or scientific text, e.g. "1.7", "-2.5e-3".
  static Real parse(const std::string& text, mpfr_prec_t bits);
  static Real pi(mpfr_prec_t bits);
  static Real ln2(mpfr_prec_t bits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  /// Copy rounded to a different precision.
  Real with_precision(mpfr_prec_t bits) const;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(value_, MPFR_RNDN); }
  /// log10 |x|, finite for any nonzero x regardless of exponent range;
  /// -infinity for zero.
  double log10_abs() const;

  /// Scientific notation with `digits` significant decimal digits,
  /// round-half-even, e.g. "1.2020569031595942854e0".
  std::string to_string(int digits) const;

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long o);
  Real& operator/=(long o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, double b);

 private:
  void check() const;

  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, long n);
Real pow(const Real& x, const Real& y);

}  // namespace zforge::numeric
