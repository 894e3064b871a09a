#pragma once

#include <cstdint>
#include <string>

#include "zforge/exact/rational.hpp"

namespace zforge::symbolic {

using exact::Rational;

/// re + i*im with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }
  /// |z|^2.
  Rational norm() const { return re * re + im * im; }
  GaussianRational inverse() const;
  GaussianRational pow(long exponent) const;

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  /// "re", "re+imi", "imi" style, e.g. "1/2-3/4i".
  std::string to_string() const;
};

/// g * sqrt(d) with d squarefree; d = 1 means no surd. Zero is stored as (0, 1).
class SurdGaussian {
 public:
  SurdGaussian() = default;
  SurdGaussian(GaussianRational g) : g_(std::move(g)) {}  // NOLINT(google-explicit-constructor)
  SurdGaussian(Rational r) : g_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  SurdGaussian(long r) : g_(r) {}  // NOLINT(google-explicit-constructor)
  /// g * sqrt(radicand); square factors of the radicand move into g.
  SurdGaussian(GaussianRational g, std::int64_t radicand);

  /// sqrt(n) for a positive integer n.
  static SurdGaussian sqrt(std::int64_t n) { return SurdGaussian(GaussianRational(1), n); }

  const GaussianRational& coefficient() const { return g_; }
  std::int64_t surd() const { return d_; }

  bool is_zero() const { return g_.is_zero(); }
  /// True when the value is a real number.
  bool is_real() const { return g_.is_real(); }
  /// True when the value is rational (real and no surd).
  bool is_rational() const { return g_.is_real() && d_ == 1; }

  SurdGaussian conj() const { return SurdGaussian(g_.conj(), d_); }
  SurdGaussian inverse() const;
  SurdGaussian pow(long exponent) const;

  SurdGaussian operator-() const { return SurdGaussian(-g_, d_); }
  friend SurdGaussian operator*(const SurdGaussian& a, const SurdGaussian& b);
  friend SurdGaussian operator/(const SurdGaussian& a, const SurdGaussian& b) { return a * b.inverse(); }
  friend bool operator==(const SurdGaussian&, const SurdGaussian&) = default;

  /// Real part as a double (for ordering and diagnostics only).
  double real_approx() const;
  double imag_approx() const;

  std::string to_string() const;

 private:
  GaussianRational g_;
  std::int64_t d_ = 1;
};

/// Exact comparison of the real parts of two surd values.
int compare_real_parts(const SurdGaussian& a, const SurdGaussian& b);

}  // namespace zforge::symbolic
