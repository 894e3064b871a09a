#include "zforge/qplane/qseries.hpp"

#include <cmath>

#include "zforge/errors.hpp"
#include "zforge/exact/arith.hpp"
#include "zforge/exact/zeta_special.hpp"
#include "zforge/numeric/series.hpp"
#include "zforge/numeric/special.hpp"

namespace zforge::qplane {

using numeric::Real;

namespace {

const double kLog10E = std::log10(std::exp(1.0));

double check_disk(const Complex& q, double r_max) {
  const double r = numeric::abs(q).to_double();
  if (!(r < r_max)) throw DomainError("q-series requires |q| < " + std::to_string(r_max));
  return r;
}

// sum_n n^p q^n / (1 - q^n)
Complex lambert_sum(long p, const Complex& q, double r, const PrecisionContext& ctx, long max_terms) {
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Complex qw(q.re().with_precision(bits), q.im().with_precision(bits));
  if (r == 0.0) return Complex(ctx.bits());
  const Complex one = Complex::from_long(1, bits);
  Complex q_pow = one;
  auto term = [&](long n) {
    q_pow *= qw;
    return q_pow / (one - q_pow) * numeric::pow(Real::from_long(n, bits), p);
  };
  // |1 - q^n| >= 1 - |q|
  const double log_r = std::log(r);
  const double log_den = std::log1p(-r);
  auto tail = [&](long n) { return (numeric::log_power_geometric_tail(-p, log_r, n) - log_den) * kLog10E; };
  return numeric::sum_until_bound(term, tail, ctx.truncation_digits(), 1, 1, max_terms, bits).value;
}

// sum_m sigma_a(m) q^m, using sigma_a(m) <= m^(max(a,0) + 1).
Complex divisor_sum(long a, const Complex& q, double r, const PrecisionContext& ctx, long max_terms) {
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Complex qw(q.re().with_precision(bits), q.im().with_precision(bits));
  if (r == 0.0) return Complex(ctx.bits());
  Complex q_pow = Complex::from_long(1, bits);
  auto term = [&](long m) {
    q_pow *= qw;
    return q_pow * Real::from_rational(exact::divisor_sigma(a, m), bits);
  };
  const long growth = std::max(a, 0L) + 1;
  const double log_r = std::log(r);
  auto tail = [&](long m) { return numeric::log_power_geometric_tail(-growth, log_r, m) * kLog10E; };
  return numeric::sum_until_bound(term, tail, ctx.truncation_digits(), 1, 1, max_terms, bits).value;
}

Complex zeta_value(long s, const PrecisionContext& ctx) {
  if (s <= 0) return Complex(Real::from_rational(exact::zeta_negative(-s), ctx.bits() + 32));
  return Complex(numeric::zeta_real(s, ctx.widened(4)).with_precision(ctx.bits() + 32));
}

Complex narrowed(const Complex& z, const PrecisionContext& ctx) {
  return Complex(z.re().with_precision(ctx.bits()), z.im().with_precision(ctx.bits()));
}

}  // namespace

Complex P_q(long s, const Complex& q, const PrecisionContext& ctx, Representation rep, double r_max, long max_terms) {
  if (s == 1) throw PoleError("P_1(q) diverges: zeta has a pole at s = 1");
  const double r = check_disk(q, r_max);
  const Complex series = rep == Representation::Lambert ? lambert_sum(-s, q, r, ctx, max_terms)
                                                        : divisor_sum(-s, q, r, ctx, max_terms);
  return narrowed(-zeta_value(s, ctx) - series, ctx);
}

Complex eisenstein_G(long k2, const Complex& q, const PrecisionContext& ctx, Representation rep, double r_max) {
  if (k2 < 4 || k2 % 2 != 0) throw DomainError("eisenstein_G requires an even weight >= 4");
  const double r = check_disk(q, r_max);
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Complex series = rep == Representation::Lambert ? lambert_sum(k2 - 1, q, r, ctx, kDefaultMaxTerms)
                                                        : divisor_sum(k2 - 1, q, r, ctx, kDefaultMaxTerms);
  // 2 (2 pi i)^2k / (2k-1)! = 2 (-1)^k (2 pi)^2k / (2k-1)!
  Real factor = numeric::pow(Real::pi(bits) * 2L, k2) * 2L /
                Real::from_integer(exact::factorial(k2 - 1), bits);
  if ((k2 / 2) % 2 == 1) factor = -factor;
  const Real two_zeta = Real::from_rational(exact::zeta_even_over_pi_power(k2 / 2), bits) *
                        numeric::pow(Real::pi(bits), k2) * 2L;
  return narrowed(Complex(two_zeta) + series * factor, ctx);
}

Complex g3(const Complex& q, const PrecisionContext& ctx, Representation rep, double r_max) {
  const double r = check_disk(q, r_max);
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Complex series = rep == Representation::Lambert ? lambert_sum(5, q, r, ctx, kDefaultMaxTerms)
                                                        : divisor_sum(5, q, r, ctx, kDefaultMaxTerms);
  const Real scale = numeric::pow(Real::pi(bits), 6L) * 8L / 27L;
  return narrowed((Complex::from_long(1, bits) - series * Real::from_long(504, bits)) * scale, ctx);
}

}  // namespace zforge::qplane
