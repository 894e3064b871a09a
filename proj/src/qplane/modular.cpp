#include "zforge/qplane/modular.hpp"

#include <algorithm>
#include <functional>

#include "zforge/errors.hpp"
#include "zforge/exact/bernoulli.hpp"
#include "zforge/numeric/evaluate.hpp"
#include "zforge/numeric/special.hpp"
#include "zforge/numeric/sums.hpp"
#include "zforge/symbolic/contour.hpp"

namespace zforge::qplane {

using numeric::Real;
using symbolic::SurdGaussian;
using symbolic::SymbolicValue;

namespace {

void require_weight(long k) {
  if (k < 3 || k % 2 == 0) throw DomainError("modular laws require odd k >= 3");
}

Complex widen(const Complex& z, mpfr_prec_t bits) {
  return Complex(z.re().with_precision(bits), z.im().with_precision(bits));
}

Complex two_pi_i(mpfr_prec_t bits) { return Complex(Real(bits), Real::pi(bits) * 2L); }

}  // namespace

Complex P_tau(long k, const Complex& tau, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Complex t = widen(tau, bits);
  const int side = t.im().sign();
  if (side == 0) throw DomainError("P_tau requires tau off the real axis");
  const Complex x = two_pi_i(bits) * t;
  if (side < 0) return numeric::sum_S(k, x, ctx);
  return P_q(k, numeric::exp(x), ctx);
}

Complex K_tau(long k, const Complex& tau, const PrecisionContext& ctx) {
  require_weight(k);
  if (tau.is_zero()) throw DomainError("K_tau requires tau != 0");
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Complex t = widen(tau, bits);
  const Complex one = Complex::from_long(1, bits);
  const Complex t2 = t * t;
  Complex poly(bits);
  Complex t_pow = one;
  for (long j = 0; j <= (k + 1) / 2; ++j, t_pow *= t2) {
    const exact::Rational c = exact::bernoulli_over_factorial(2 * j) * exact::bernoulli_over_factorial(k + 1 - 2 * j);
    poly += t_pow * Real::from_rational(c, bits);
  }
  const Complex zeta(numeric::zeta_real(k, ctx.widened(4)).with_precision(bits));
  const Complex out = (numeric::pow(t, k - 1) - one) * zeta / Real::from_long(2, bits) -
                      numeric::pow(two_pi_i(bits), k) / (t * Real::from_long(2, bits)) * poly;
  return widen(out, ctx.bits());
}

Complex M_tau(long k, const Complex& tau, const PrecisionContext& ctx) {
  return P_tau(k, tau, ctx) - K_tau(k, tau, ctx) / Real::from_long(2, ctx.bits());
}

namespace {

using KEval = std::function<Complex(const Complex&)>;

ModularResult check_with(ModularLaw law, long k, const Complex& tau, const KEval& K, const KEval& K_inv,
                         const PrecisionContext& ctx) {
  require_weight(k);
  if (tau.is_zero()) throw DomainError("modular_check requires tau != 0");
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Complex t = widen(tau, bits);
  const Complex one = Complex::from_long(1, bits);
  const Complex inv = -(one / t);
  const Complex factor = numeric::pow(t, 1 - k);

  Complex lhs(bits);
  Complex rhs(bits);
  switch (law) {
    case ModularLaw::Periodicity:
      lhs = P_tau(k, t + one, ctx);
      rhs = P_tau(k, t, ctx);
      break;
    case ModularLaw::Inversion:
      lhs = P_tau(k, inv, ctx);
      rhs = factor * P_tau(k, t, ctx) + K_inv(inv);
      break;
    case ModularLaw::KQuasi:
      lhs = K_inv(inv);
      rhs = -(factor * K(t));
      break;
    case ModularLaw::MTransform:
    case ModularLaw::MTransformAsPrinted: {
      const Complex half(Real(0.5, bits));
      lhs = P_tau(k, inv, ctx) - K_inv(inv) * half;
      rhs = factor * (P_tau(k, t, ctx) - K(t) * half);
      if (law == ModularLaw::MTransformAsPrinted) rhs = -rhs;
      break;
    }
  }
  ModularResult out{widen(lhs - rhs, ctx.bits())};
  out.log10_scale = std::max({0.0, numeric::abs(lhs).log10_abs(), numeric::abs(rhs).log10_abs()});
  return out;
}

}  // namespace

ModularResult modular_check(ModularLaw law, long k, const Complex& tau, const PrecisionContext& ctx) {
  const KEval K = [&](const Complex& z) { return K_tau(k, z, ctx); };
  return check_with(law, k, tau, K, K, ctx);
}

ModularResult modular_check(ModularLaw law, long k, const SurdGaussian& tau, const PrecisionContext& ctx) {
  require_weight(k);
  if (tau.is_zero()) throw DomainError("modular_check requires tau != 0");
  const mpfr_prec_t bits = ctx.bits() + 32;
  const SymbolicValue k_tau = symbolic::eval_K(static_cast<int>(k), tau);
  const SymbolicValue k_inv = symbolic::eval_K(static_cast<int>(k), -tau.inverse());
  const PrecisionContext wide = ctx.widened(4);
  const Complex k_tau_value = widen(numeric::eval_symbolic(k_tau, wide), bits);
  const Complex k_inv_value = widen(numeric::eval_symbolic(k_inv, wide), bits);
  const KEval K = [&](const Complex&) { return k_tau_value; };
  const KEval K_inv = [&](const Complex&) { return k_inv_value; };
  return check_with(law, k, numeric::to_complex(tau, bits), K, K_inv, ctx);
}

SymbolicValue k_quasi_exact(long k, const SurdGaussian& tau) {
  require_weight(k);
  if (tau.is_zero()) throw DomainError("k_quasi_exact requires tau != 0");
  return symbolic::eval_K(static_cast<int>(k), -tau.inverse()) +
         symbolic::eval_K(static_cast<int>(k), tau).scaled(tau.pow(1 - k));
}

ModularLaw modular_law_from_name(const std::string& name) {
  for (ModularLaw law : {ModularLaw::Periodicity, ModularLaw::Inversion, ModularLaw::KQuasi, ModularLaw::MTransform,
                         ModularLaw::MTransformAsPrinted}) {
    if (modular_law_name(law) == name) return law;
  }
  throw ParseError("unknown modular law '" + name + "'");
}

std::string modular_law_name(ModularLaw law) {
  switch (law) {
    case ModularLaw::Periodicity: return "periodicity";
    case ModularLaw::Inversion: return "inversion";
    case ModularLaw::KQuasi: return "k-quasi";
    case ModularLaw::MTransform: return "m-transform";
    case ModularLaw::MTransformAsPrinted: return "m-transform-printed";
  }
  return "?";
}

}  // namespace zforge::qplane
