#include "zforge/numeric/complex.hpp"

#include "zforge/errors.hpp"

namespace zforge::numeric {

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  if (im_.precision() > re_.precision()) re_ = re_.with_precision(im_.precision());
  if (re_.precision() > im_.precision()) im_ = im_.with_precision(re_.precision());
}

Complex::Complex(Real re) : re_(std::move(re)), im_(re_.precision()) {}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.is_zero()) throw PrecisionError("complex division by zero");
  const Real den = o.norm();
  Real re = (re_ * o.re_ + im_ * o.im_) / den;
  im_ = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(re);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

Complex& Complex::operator/=(const Real& o) {
  re_ /= o;
  im_ /= o;
  return *this;
}

std::string Complex::to_string(int digits) const {
  if (im_.is_zero()) return re_.to_string(digits);
  std::string out = re_.to_string(digits);
  if (im_.sign() < 0) out += " - " + (-im_).to_string(digits) + "i";
  else out += " + " + im_.to_string(digits) + "i";
  return out;
}

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex& z) {
  const Real mag = exp(z.re());
  if (z.im().is_zero()) return Complex(mag);
  return Complex(mag * cos(z.im()), mag * sin(z.im()));
}

Complex log(const Complex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  return Complex(log(abs(z)), arg(z));
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  return exp(log(z) * Real(0.5, z.precision()));
}

Complex sin(const Complex& z) {
  return Complex(sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im()));
}

Complex cos(const Complex& z) {
  return Complex(cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im())));
}

Complex pow(const Complex& z, long n) {
  if (n < 0) {
    if (z.is_zero()) throw DomainError("zero to a negative power");
    return Complex::from_long(1, z.precision()) / pow(z, -n);
  }
  Complex result = Complex::from_long(1, z.precision());
  Complex base = z;
  unsigned long e = static_cast<unsigned long>(n);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

Complex pow(const Complex& z, const Complex& w) {
  if (z.is_zero()) {
    if (w.re().sign() > 0) return Complex(z.precision());
    throw DomainError("zero to a non-positive complex power");
  }
  return exp(w * log(z));
}

Complex pow(const Real& base, const Complex& w) {
  if (base.sign() <= 0) throw DomainError("real base of a complex power must be positive");
  return exp(w * log(base));
}

}  // namespace zforge::numeric
