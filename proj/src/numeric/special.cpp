#include "zforge/numeric/special.hpp"

#include <cmath>
#include <optional>

#include "zforge/errors.hpp"
#include "zforge/exact/arith.hpp"
#include "zforge/exact/bernoulli.hpp"
#include "zforge/exact/zeta_special.hpp"
#include "zforge/numeric/series.hpp"

namespace zforge::numeric {

namespace {

constexpr double kLog10Of2 = 0.30102999566398120;

bool is_real_integer(const Complex& z) { return z.im().is_zero() && mpfr_integer_p(z.re().get()) != 0; }

Real rational_real(const exact::Rational& r, mpfr_prec_t bits) { return Real::from_rational(r, bits); }

// n^(-s) for a positive integer n.
Complex int_pow_neg(long n, const Complex& s, mpfr_prec_t bits) {
  if (is_real_integer(s) && s.re().to_long() > -1000000 && s.re().to_long() < 1000000) {
    return Complex(pow(Real::from_long(n, bits), -s.re().to_long()));
  }
  return exp(-s * log(Real::from_long(n, bits)));
}

// Euler-Maclaurin with a fixed cutoff; returns nothing if the correction
// terms start growing before they become negligible.
std::optional<Complex> zeta_em(const Complex& s, long N, int digits, mpfr_prec_t bits) {
  Complex head(bits);
  for (long n = 1; n < N; ++n) head += int_pow_neg(n, s, bits);
  const Real logN = log(Real::from_long(N, bits));
  const Complex n_neg_s = exp(-s * logN);
  const Complex one = Complex::from_long(1, bits);
  Complex total = head + n_neg_s * Real::from_long(N, bits) / (s - one) + n_neg_s * Real(0.5, bits);

  const double log10_target = std::max(0.0, abs(total).log10_abs()) - digits;
  const Real inv_N2 = Real::from_long(1, bits) / (Real::from_long(N, bits) * Real::from_long(N, bits));
  // term_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * N^(1-s-2j)
  Complex poch = s;
  Complex power = n_neg_s / Real::from_long(N, bits);
  double previous = std::numeric_limits<double>::infinity();
  for (long j = 1;; ++j) {
    const Complex term = poch * power * rational_real(exact::bernoulli_over_factorial(2 * j), bits);
    const double lt = abs(term).log10_abs();
    total += term;
    if (lt < log10_target) return total;
    if (lt > previous) return std::nullopt;
    previous = lt;
    poch *= (s + Complex::from_long(2 * j - 1, bits)) * (s + Complex::from_long(2 * j, bits));
    power *= inv_N2;
  }
}

}  // namespace

Complex zeta_complex(const Complex& s, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Complex sw(s.re().with_precision(bits), s.im().with_precision(bits));
  if (sw.im().is_zero() && sw.re() == Real::from_long(1, bits)) throw PoleError("zeta has a pole at s = 1");

  if (sw.re().sign() < 0) {
    // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)
    const Real pi = Real::pi(bits);
    const Complex one = Complex::from_long(1, bits);
    const Complex one_minus_s = one - sw;
    const Complex factor = pow(Real::from_long(2, bits), sw) * pow(pi, sw - one) *
                           sin(sw * pi / Real::from_long(2, bits));
    const Complex z = factor * gamma_complex(one_minus_s, ctx.widened(10)) * zeta_complex(one_minus_s, ctx.widened(10));
    return Complex(z.re().with_precision(ctx.bits()), z.im().with_precision(ctx.bits()));
  }

  const int digits = ctx.digits() + ctx.guard();
  long N = static_cast<long>(std::ceil(0.7 * digits + std::fabs(sw.im().to_double()))) + 10;
  for (int attempt = 0; attempt < 12; ++attempt, N *= 2) {
    if (auto z = zeta_em(sw, N, digits, bits)) {
      return Complex(z->re().with_precision(ctx.bits()), z->im().with_precision(ctx.bits()));
    }
  }
  throw PrecisionError("Euler-Maclaurin zeta did not converge");
}

Real zeta_real(long s, const PrecisionContext& ctx) {
  return zeta_complex(Complex::from_long(s, ctx.bits()), ctx).re();
}

namespace {

// log Gamma(w) by the Stirling series for |w| large and Re w > 0; nothing
// if the asymptotic terms turn around before reaching the target.
std::optional<Complex> log_gamma_stirling(const Complex& w, int digits, mpfr_prec_t bits) {
  const Real half(0.5, bits);
  const Complex log_w = log(w);
  Complex total = (w - Complex(half)) * log_w - w + Complex(log(Real::pi(bits) * Real::from_long(2, bits)) * half);
  const Complex inv_w = Complex::from_long(1, bits) / w;
  const Complex inv_w2 = inv_w * inv_w;
  Complex power = inv_w;
  double previous = std::numeric_limits<double>::infinity();
  for (long j = 1;; ++j) {
    const exact::Rational c = exact::bernoulli(2 * j) / exact::Rational((2 * j) * (2 * j - 1));
    const Complex term = power * rational_real(c, bits);
    const double lt = abs(term).log10_abs();
    total += term;
    if (lt < -digits) return total;
    if (lt > previous) return std::nullopt;
    previous = lt;
    power *= inv_w2;
  }
}

}  // namespace

Complex gamma_complex(const Complex& z, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Complex zw(z.re().with_precision(bits), z.im().with_precision(bits));
  if (is_real_integer(zw) && zw.re().sign() <= 0) throw PoleError("gamma has a pole at a non-positive integer");

  const Real half(0.5, bits);
  if (zw.re() < half) {
    const Real pi = Real::pi(bits);
    const Complex reflected = gamma_complex(Complex::from_long(1, bits) - zw, ctx.widened(10));
    const Complex g = Complex(pi) / (sin(zw * pi) * reflected);
    return Complex(g.re().with_precision(ctx.bits()), g.im().with_precision(ctx.bits()));
  }

  const int digits = ctx.digits() + ctx.guard();
  double radius = 0.4 * digits + 8.0;
  for (int attempt = 0; attempt < 8; ++attempt, radius *= 2) {
    const double modulus = abs(zw).to_double();
    const long shift = modulus >= radius ? 0 : static_cast<long>(std::ceil(radius - zw.re().to_double()));
    Complex w = zw + Complex::from_long(shift, bits);
    const auto lg = log_gamma_stirling(w, digits, bits);
    if (!lg) continue;
    Complex product = Complex::from_long(1, bits);
    for (long i = 0; i < shift; ++i) product *= zw + Complex::from_long(i, bits);
    const Complex g = exp(*lg) / product;
    return Complex(g.re().with_precision(ctx.bits()), g.im().with_precision(ctx.bits()));
  }
  throw PrecisionError("Stirling series for gamma did not converge");
}

namespace {

// Li_s(e^mu) = sum_{k != s-1} zeta(s-k) mu^k / k! + mu^(s-1)/(s-1)! (H_(s-1) - log(-mu)),
// valid for |mu| < 2 pi and integer s >= 1.
Complex polylog_mu_series(long s, const Complex& mu, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 16;
  const double rho = abs(mu).to_double() / (2.0 * M_PI);
  if (rho >= 0.95) throw DomainError("polylog expansion point too far from 1");
  const int digits = ctx.digits() + ctx.guard();

  Complex total(bits);
  const exact::Rational harmonic = s > 1 ? exact::harmonic(s - 1) : exact::Rational(0);
  const Complex log_minus_mu = log(-mu);
  Complex mu_pow = Complex::from_long(1, bits);  // mu^k / k!
  const double log10_two_pi = std::log10(2.0 * M_PI);
  for (long k = 0;; ++k) {
    if (k > 0) mu_pow = mu_pow * mu / Real::from_long(k, bits);
    if (k == s - 1) {
      total += mu_pow * (Complex(rational_real(harmonic, bits)) - log_minus_mu);
    } else {
      const long arg = s - k;
      Complex zeta_val(bits);
      if (arg <= 0) {
        zeta_val = Complex(rational_real(exact::zeta_negative(-arg), bits));
      } else {
        zeta_val = zeta_complex(Complex::from_long(arg, bits), ctx);
      }
      total += zeta_val * mu_pow;
    }
    // For k >= s + 1: |zeta(s-k)| mu^k / k! <= 4 (2 pi)^(s-1) rho^k.
    if (k > s + 1) {
      const double log10_tail = std::log10(4.0) + (s - 1) * log10_two_pi + (k + 1) * std::log10(rho) -
                                std::log10(1.0 - rho);
      if (log10_tail < std::max(0.0, abs(total).log10_abs()) - digits) break;
    }
  }
  return Complex(total.re().with_precision(ctx.bits()), total.im().with_precision(ctx.bits()));
}

}  // namespace

Complex polylog_series(long s, const Complex& z, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  if (z.is_zero()) return Complex(bits);
  const Real r = abs(z);
  const double log10_r = r.log10_abs();
  const double tol = -(static_cast<double>(bits) - 8) * kLog10Of2;
  const Real one = Real::from_long(1, bits);
  const bool on_circle = std::log10(std::fabs((r - one).to_double()) + 1e-300) < tol;

  if (!on_circle && r > one) throw DomainError("polylog series requires |z| <= 1");
  if (on_circle) {
    if (s < 2) throw DomainError("polylog on |z| = 1 requires s >= 2");
    if (abs(z - Complex(one)).log10_abs() < tol) return Complex(zeta_real(s, ctx));
    return polylog_mu_series(s, log(z), ctx);
  }
  if (s >= 1 && log10_r > std::log10(0.75)) return polylog_mu_series(s, log(z), ctx);

  const double log_r = log10_r / std::log10(std::exp(1.0));
  Complex z_pow = Complex::from_long(1, bits);
  auto term = [&](long n) {
    z_pow *= z;
    return Complex(z_pow) * pow(Real::from_long(n, bits), -s);
  };
  auto tail = [&](long n) { return log_power_geometric_tail(s, log_r, n) * std::log10(std::exp(1.0)); };
  return sum_until_bound(term, tail, ctx.truncation_digits(), 1, 1, 50'000'000, bits).value;
}

}  // namespace zforge::numeric
