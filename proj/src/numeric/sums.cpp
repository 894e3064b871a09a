#include "zforge/numeric/sums.hpp"

#include <cmath>

#include "zforge/errors.hpp"
#include "zforge/exact/arith.hpp"
#include "zforge/exact/zeta_special.hpp"
#include "zforge/numeric/special.hpp"

namespace zforge::numeric {

namespace {

constexpr long kMaxTerms = 20'000'000;
const double kLog10E = std::log10(std::exp(1.0));

// sum over n = first, first+step, ... of n^-s w^n / (1 + sign w^n), w = e^-x.
// sign = -1 gives S, +1 gives T.
SeriesResult exponential_sum(long s, const Complex& x, int sign, long step, const PrecisionContext& ctx,
                             long terms) {
  if (x.re().sign() <= 0) throw DomainError("exponential sum requires Re(x) > 0");
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Complex xw(x.re().with_precision(bits), x.im().with_precision(bits));
  const Complex w = exp(-xw);
  const Complex w_step = pow(w, step);
  const Complex one = Complex::from_long(1, bits);
  const double a = x.re().to_double();
  if (!(a > 0.0)) throw PrecisionError("Re(x) too small to bound the series tail");

  Complex w_pow = w;
  bool started = false;
  auto term = [&](long n) {
    if (started) w_pow *= w_step;
    started = true;
    Complex denom = one;
    if (sign < 0) denom -= w_pow;
    else denom += w_pow;
    return w_pow / denom * pow(Real::from_long(n, bits), -s);
  };
  // |1 +- w^n| >= 1 - e^(-a n) >= 1 - e^(-a)
  const double log_denominator = std::log(-std::expm1(-a));
  auto tail = [&](long n) { return (log_power_geometric_tail(s, -a, n) - log_denominator) * kLog10E; };

  SeriesResult out{Complex(bits)};
  if (terms > 0) {
    for (long n = 1; n <= terms; n += step) {
      out.value += term(n);
      out.last_index = n;
    }
    out.log10_error_bound = tail(out.last_index);
  } else {
    out = sum_until_bound(term, tail, ctx.truncation_digits(), 1, step, kMaxTerms, bits);
  }
  out.value = Complex(out.value.re().with_precision(ctx.bits()), out.value.im().with_precision(ctx.bits()));
  return out;
}

}  // namespace

SeriesResult sum_S_detailed(long s, const Complex& x, const PrecisionContext& ctx, long terms) {
  return exponential_sum(s, x, -1, 1, ctx, terms);
}

SeriesResult sum_T_detailed(long s, const Complex& x, const PrecisionContext& ctx, long terms) {
  return exponential_sum(s, x, +1, 1, ctx, terms);
}

Complex sum_S(long s, const Complex& x, const PrecisionContext& ctx) { return sum_S_detailed(s, x, ctx).value; }

Complex sum_T(long s, const Complex& x, const PrecisionContext& ctx) { return sum_T_detailed(s, x, ctx).value; }

Complex sum_T_odd(long s, const Complex& x, const PrecisionContext& ctx) {
  return exponential_sum(s, x, +1, 2, ctx, 0).value;
}

Complex odd_apostol_sum(long k, const PrecisionContext& ctx) {
  if (k < 0) throw DomainError("odd_apostol_sum requires k >= 0");
  return sum_T_odd(-(4 * k + 1), Complex(Real::pi(ctx.bits() + 32)), ctx);
}

Complex numeric_I(long k, const Complex& x, const PrecisionContext& ctx) {
  if (k < 3 || k % 2 == 0) throw DomainError("numeric_I: k must be odd and >= 3");
  if (x.is_zero()) throw DomainError("numeric_I: x must be nonzero");
  const PrecisionContext inner = ctx.widened(5);
  const mpfr_prec_t bits = inner.bits();
  const Complex xw(x.re().with_precision(bits), x.im().with_precision(bits));

  auto zeta_at = [&](long j) -> Real {
    if (j == 0) return Real(-0.5, bits);
    if (j < 0) return Real::from_rational(exact::zeta_negative(-j), bits);
    return zeta_real(j, inner);
  };

  Complex total = Complex(zeta_at(k + 1)) / xw;
  const Complex minus_x = -xw;
  Complex power = Complex::from_long(1, bits);  // (-x)^n / n!
  for (long n = 0; n <= k; ++n) {
    if (n > 0) power = power * minus_x / Real::from_long(n, bits);
    if (n == k - 1) continue;
    const Real zeta_neg = zeta_at(-n);
    if (zeta_neg.is_zero()) continue;
    total += power * (zeta_at(k - n) * zeta_neg);
  }
  // zeta'(-2h) = (-1)^h (2h)! / (2 (2 pi)^(2h)) zeta(2h+1), 2h = k - 1
  const long h = (k - 1) / 2;
  Real deriv = Real::from_integer(exact::factorial(2 * h), bits) * zeta_at(2 * h + 1) /
               (pow(Real::pi(bits) * Real::from_long(2, bits), 2 * h) * Real::from_long(2, bits));
  if (h % 2 == 1) deriv = -deriv;
  Complex power_km1 = pow(minus_x, k - 1) / Real::from_integer(exact::factorial(k - 1), bits);
  total += power_km1 * deriv;
  return Complex(total.re().with_precision(ctx.bits()), total.im().with_precision(ctx.bits()));
}

}  // namespace zforge::numeric
