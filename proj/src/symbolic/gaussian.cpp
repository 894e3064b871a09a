#include "zforge/symbolic/gaussian.hpp"

#include <cmath>

#include "zforge/errors.hpp"
#include "zforge/exact/arith.hpp"

namespace zforge::symbolic {

GaussianRational GaussianRational::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw DomainError("inverse of zero Gaussian rational");
  return {re / n, -im / n};
}

GaussianRational GaussianRational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  GaussianRational result(1);
  GaussianRational base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::string GaussianRational::to_string() const {
  if (im.is_zero()) return re.to_string();
  std::string imag = im == Rational(1) ? "" : (im == Rational(-1) ? "-" : im.to_string());
  if (re.is_zero()) return imag + "i";
  return re.to_string() + (im.sign() > 0 ? "+" : "") + imag + "i";
}

SurdGaussian::SurdGaussian(GaussianRational g, std::int64_t radicand) : g_(std::move(g)) {
  if (radicand < 1) throw DomainError("surd radicand must be positive");
  const auto [square, core] = exact::squarefree_decompose(radicand);
  g_ *= GaussianRational(Rational(square));
  d_ = g_.is_zero() ? 1 : core;
}

SurdGaussian SurdGaussian::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero surd value");
  // 1 / (g sqrt d) = sqrt(d) / (g d)
  return SurdGaussian((g_ * GaussianRational(Rational(d_))).inverse(), d_);
}

SurdGaussian SurdGaussian::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  // (g sqrt d)^n = g^n d^(n/2) [sqrt d if n odd]
  GaussianRational g = g_.pow(exponent) * GaussianRational(Rational(static_cast<long>(d_)).pow(exponent / 2));
  return SurdGaussian(std::move(g), exponent % 2 == 1 ? d_ : 1);
}

SurdGaussian operator*(const SurdGaussian& a, const SurdGaussian& b) {
  if (a.d_ == b.d_) {
    return SurdGaussian(a.g_ * b.g_ * GaussianRational(Rational(static_cast<long>(a.d_))), 1);
  }
  return SurdGaussian(a.g_ * b.g_, a.d_ * b.d_);
}

double SurdGaussian::real_approx() const { return g_.re.to_double() * std::sqrt(static_cast<double>(d_)); }
double SurdGaussian::imag_approx() const { return g_.im.to_double() * std::sqrt(static_cast<double>(d_)); }

std::string SurdGaussian::to_string() const {
  if (d_ == 1) return g_.to_string();
  return "(" + g_.to_string() + ")*sqrt(" + std::to_string(d_) + ")";
}

int compare_real_parts(const SurdGaussian& a, const SurdGaussian& b) {
  const Rational& ra = a.coefficient().re;
  const Rational& rb = b.coefficient().re;
  const int sa = ra.sign();
  const int sb = rb.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  const Rational ma = ra * ra * Rational(static_cast<long>(a.surd()));
  const Rational mb = rb * rb * Rational(static_cast<long>(b.surd()));
  if (ma == mb) return 0;
  const int mag = ma < mb ? -1 : 1;
  return sa > 0 ? mag : -mag;
}

}  // namespace zforge::symbolic
