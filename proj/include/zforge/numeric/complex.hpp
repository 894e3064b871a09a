#pragma once

#include <string>

#include "zforge/numeric/real.hpp"

namespace zforge::numeric {

/// Rectangular arbitrary-precision complex value.
class Complex {
 public:
  explicit Complex(mpfr_prec_t bits = 64) : re_(bits), im_(bits) {}
  Complex(Real re, Real im);
  explicit Complex(Real re);

  static Complex from_long(long re, mpfr_prec_t bits) { return Complex(Real::from_long(re, bits)); }
  static Complex from_doubles(double re, double im, mpfr_prec_t bits) { return Complex(Real(re, bits), Real(im, bits)); }
  static Complex i(mpfr_prec_t bits) { return Complex(Real(bits), Real::from_long(1, bits)); }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Complex conj() const { return Complex(re_, -im_); }
  Real norm() const { return re_ * re_ + im_ * im_; }

  Complex operator-() const { return Complex(-re_, -im_); }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& b, Complex a) { return a *= b; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }

  /// "re" when the imaginary part is zero, otherwise "re + im i"
  /// (or "re - |im| i"), each with `digits` significant digits.
  std::string to_string(int digits) const;

 private:
  Real re_;
  Real im_;
};

Real abs(const Complex& z);
/// Principal argument in (-pi, pi].
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal logarithm; log 0 is a domain error.
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex pow(const Complex& z, long n);
/// Principal branch z^w = exp(w log z).
Complex pow(const Complex& z, const Complex& w);
/// Principal branch of a positive real base raised to a complex power.
Complex pow(const Real& base, const Complex& w);

}  // namespace zforge::numeric
