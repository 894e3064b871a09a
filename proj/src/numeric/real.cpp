#include "zforge/numeric/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zforge/errors.hpp"

namespace zforge::numeric {

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
  check();
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

void Real::check() const {
  if (!mpfr_number_p(value_)) throw PrecisionError("non-finite floating value (overflow or invalid operation)");
}

Real Real::from_long(long value, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_si(r.value_, value, MPFR_RNDN);
  return r;
}

Real Real::from_rational(const exact::Rational& value, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_q(r.value_, value.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::from_integer(const exact::Integer& value, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_z(r.value_, value.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::parse(const std::string& text, mpfr_prec_t bits) {
  Real r(bits);
  if (text.empty()) throw ParseError("empty number");
  char* end = nullptr;
  mpfr_strtofr(r.value_, text.c_str(), &end, 10, MPFR_RNDN);
  if (end != text.c_str() + text.size()) throw ParseError("malformed number '" + text + "'");
  r.check();
  return r;
}

Real Real::pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::ln2(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_log2(r.value_, MPFR_RNDN);
  return r;
}

Real Real::with_precision(mpfr_prec_t bits) const {
  Real r(bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

double Real::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  if (is_zero()) return "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), value_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

namespace {

// Grows the target precision so a binary op keeps the wider operand's bits.
void widen(Real& target, const Real& other) {
  if (other.precision() > target.precision()) mpfr_prec_round(target.get(), other.precision(), MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(*this, o);
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  check();
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(*this, o);
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  check();
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(*this, o);
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  check();
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(*this, o);
  if (o.is_zero()) throw PrecisionError("floating division by zero");
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  check();
  return *this;
}

Real& Real::operator*=(long o) {
  mpfr_mul_si(value_, value_, o, MPFR_RNDN);
  check();
  return *this;
}

Real& Real::operator/=(long o) {
  if (o == 0) throw PrecisionError("floating division by zero");
  mpfr_div_si(value_, value_, o, MPFR_RNDN);
  check();
  return *this;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, double b) {
  const int c = mpfr_cmp_d(a.value_, b);
  return c < 0 ? std::partial_ordering::less : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

namespace {

template <typename Fn>
Real unary(const Real& x, Fn fn) {
  Real r(x.precision());
  fn(r.get(), x.get(), MPFR_RNDN);
  if (!mpfr_number_p(r.get())) throw PrecisionError("non-finite result of an elementary function");
  return r;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative number");
  return unary(x, mpfr_sqrt);
}
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log of a non-positive number");
  return unary(x, mpfr_log);
}
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  if (!mpfr_number_p(r.get())) throw PrecisionError("non-finite power");
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  if (!mpfr_number_p(r.get())) throw PrecisionError("non-finite power");
  return r;
}

}  // namespace zforge::numeric
