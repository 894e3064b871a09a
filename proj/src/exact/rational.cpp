#include "zforge/exact/rational.hpp"

#include <ostream>

#include "zforge/errors.hpp"

namespace zforge::exact {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    Integer out;
    const std::string digits = (!part.empty() && part[0] == '+') ? part.substr(1) : part;
    if (digits.empty() || out.set_str(digits, 10) != 0) {
      throw ParseError("malformed rational '" + s + "'");
    }
    return out;
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const Integer num = parse_int(s.substr(0, slash));
  const Integer den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ParseError("rational with zero denominator '" + s + "'");
  return Rational(num, den);
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace zforge::exact
