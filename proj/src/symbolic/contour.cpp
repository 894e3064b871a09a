#include "zforge/symbolic/contour.hpp"

#include <optional>

#include "zforge/errors.hpp"
#include "zforge/exact/arith.hpp"
#include "zforge/exact/bernoulli.hpp"
#include "zforge/exact/zeta_special.hpp"

namespace zforge::symbolic {

namespace {

using exact::bernoulli;
using exact::bernoulli_over_factorial;
using exact::binomial;
using exact::factorial;
using exact::Integer;

void check_odd_k(int k, const SurdGaussian& arg, const char* what) {
  if (k < 3 || k % 2 == 0) throw DomainError(std::string(what) + ": k must be odd and >= 3");
  if (arg.is_zero()) throw DomainError(std::string(what) + ": argument must be nonzero");
}

GaussianRational i_pow(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::i();
  }
}

Rational rat(const Integer& z) { return Rational(z); }

}  // namespace

SymbolicValue eval_I_closed(int k, const SurdGaussian& omega) {
  check_odd_k(k, omega, "eval_I_closed");
  // -2 I_k(2 pi w) = zeta(k) [1 - (w/i)^(k-1)]
  //               + (2pi)^k / (w (k+1)!) sum_j C(k+1,2j) w^(2j) i^(k+1-2j) B_2j B_(k+1-2j)
  const SurdGaussian w_over_i = omega * SurdGaussian(-GaussianRational::i());
  // w_over_i^(k-1) has even exponent, so it is a Gaussian rational.
  const GaussianRational zeta_factor = GaussianRational(1) - w_over_i.pow(k - 1).coefficient();

  GaussianRational sum;
  for (int j = 0; j <= (k + 1) / 2; ++j) {
    const Rational bb = bernoulli(2 * j) * bernoulli(k + 1 - 2 * j);
    if (bb.is_zero()) continue;
    sum += GaussianRational(rat(binomial(k + 1, 2 * j)) * bb) * omega.pow(2 * j).coefficient() *
           i_pow(k + 1 - 2 * j);
  }
  const SurdGaussian pi_coef =
      SurdGaussian(sum * GaussianRational(Rational(2).pow(k) / rat(factorial(k + 1)))) * omega.inverse();

  SymbolicValue minus_two_I(BasisAtom::zeta(k), zeta_factor);
  minus_two_I.add(BasisAtom::pi_pow(k), pi_coef);
  return minus_two_I.scaled(Rational(-1, 2));
}

SymbolicValue eval_I_residue(int k, const SurdGaussian& omega) {
  check_odd_k(k, omega, "eval_I_residue");
  using exact::ZetaRequest;
  using exact::zeta_special;
  // x = 2 pi w; powers of x are tracked as (2w)^n pi^n.
  const SurdGaussian two_w = omega * SurdGaussian(2);

  // zeta(k+1) / x
  SymbolicValue total =
      zeta_special(ZetaRequest::even(k + 1)).scaled(two_w.inverse()).times_pi(-1);

  for (int n = 0; n <= k; ++n) {
    if (n == k - 1) continue;
    const Rational zeta_neg = exact::zeta_negative(n);
    if (zeta_neg.is_zero()) continue;
    const int m = k - n;
    SymbolicValue zeta_m;
    if (m == 0) {
      zeta_m = SymbolicValue::rational(Rational(-1, 2));
    } else if (m % 2 == 0) {
      zeta_m = zeta_special(ZetaRequest::even(m));
    } else {
      zeta_m = SymbolicValue(BasisAtom::zeta(m), SurdGaussian(1));
    }
    // (-x)^n / n! = (-2w)^n / n! * pi^n
    const SurdGaussian factor =
        (-two_w).pow(n) * SurdGaussian(zeta_neg / rat(factorial(n)));
    total += zeta_m.scaled(factor).times_pi(n);
  }

  // (-x)^(k-1)/(k-1)! zeta'(1-k); k-1 is even so the sign drops.
  const SurdGaussian deriv_factor = two_w.pow(k - 1) * SurdGaussian(Rational(1) / rat(factorial(k - 1)));
  total += zeta_special(ZetaRequest::deriv_neg_even(k - 1)).scaled(deriv_factor).times_pi(k - 1);
  return total;
}

SymbolicValue eval_K(int k, const SurdGaussian& tau) {
  check_odd_k(k, tau, "eval_K");
  // ((tau^(k-1) - 1)/2) zeta(k) - ((2 pi i)^k / (2 tau)) sum_j tau^(2j) B_2j/(2j)! B_(k+1-2j)/(k+1-2j)!
  const GaussianRational zeta_factor =
      (tau.pow(k - 1).coefficient() - GaussianRational(1)) * GaussianRational(Rational(1, 2));
  GaussianRational sum;
  for (int j = 0; j <= (k + 1) / 2; ++j) {
    const Rational bb = bernoulli_over_factorial(2 * j) * bernoulli_over_factorial(k + 1 - 2 * j);
    if (bb.is_zero()) continue;
    sum += GaussianRational(bb) * tau.pow(2 * j).coefficient();
  }
  const GaussianRational prefactor = GaussianRational(-Rational(2).pow(k) / Rational(2)) * i_pow(k);
  const SurdGaussian pi_coef = SurdGaussian(prefactor * sum) * tau.inverse();

  SymbolicValue out(BasisAtom::zeta(k), zeta_factor);
  out.add(BasisAtom::pi_pow(k), pi_coef);
  return out;
}

namespace {

// Exponent a with r = 2^a, if any.
std::optional<long> power_of_two_exponent(const Rational& r) {
  if (r.sign() <= 0) return std::nullopt;
  auto log2_exact = [](const Integer& z) -> std::optional<long> {
    const long bits = static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)) - 1;
    if (mpz_popcount(z.get_mpz_t()) != 1) return std::nullopt;
    return bits;
  };
  const auto num = log2_exact(r.numerator());
  const auto den = log2_exact(r.denominator());
  if (!num || !den) return std::nullopt;
  if (*num != 0 && *den != 0) return std::nullopt;
  return *num - *den;
}

}  // namespace

SymbolicValue eval_I_weight_one(const SurdGaussian& omega) {
  if (omega.is_zero()) throw DomainError("eval_I_weight_one: argument must be nonzero");
  if (omega.surd() != 1) throw DomainError("eval_I_weight_one: surd arguments are not supported");
  const GaussianRational& g = omega.coefficient();
  // log(w) = log2_coef * log 2 + i * pi_coef * pi
  Rational log2_coef;
  Rational pi_coef;
  if (g.is_real()) {
    const auto a = power_of_two_exponent(g.re);
    if (!a) throw DomainError("eval_I_weight_one: log(omega) is outside the basis");
    log2_coef = Rational(*a);
  } else {
    const auto a = power_of_two_exponent(g.re);
    if (!a || g.im.abs() != g.re) throw DomainError("eval_I_weight_one: log(omega) is outside the basis");
    log2_coef = Rational(*a) + Rational(1, 2);
    pi_coef = g.im.sign() > 0 ? Rational(1, 4) : Rational(-1, 4);
  }
  SymbolicValue out(BasisAtom::pi_pow(1), SurdGaussian(Rational(1, 12)) * omega.inverse());
  out.add(BasisAtom::log2(), SurdGaussian(log2_coef / Rational(2)));
  out.add(BasisAtom::pi_pow(1), SurdGaussian(GaussianRational(Rational(0), pi_coef / Rational(2))));
  out.add(BasisAtom::pi_pow(1), omega * SurdGaussian(Rational(-1, 12)));
  return out;
}

}  // namespace zforge::symbolic
