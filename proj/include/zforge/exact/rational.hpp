#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zforge::exact {

using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
///
/// Every arithmetic result is canonicalized immediately, so two equal
/// values always have identical numerator and denominator and zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const;
  Rational inverse() const;
  /// Integer power; negative exponents invert (DomainError for 0^-n).
  Rational pow(long exponent) const;

  /// "p/q", or "p" when q = 1.
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace zforge::exact
