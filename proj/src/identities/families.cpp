#include "zforge/identities/families.hpp"

#include <numeric>

#include "zforge/errors.hpp"
#include "zforge/exact/arith.hpp"
#include "zforge/exact/bernoulli.hpp"
#include "zforge/symbolic/contour.hpp"

namespace zforge::identities {

using symbolic::GaussianRational;

namespace {

void require_odd(long k, long min, const char* what) {
  if (k < min || k % 2 == 0) throw DomainError(std::string(what) + ": k must be odd and >= " + std::to_string(min));
}

SymbolicValue contour_value(long k, const SurdGaussian& omega) {
  if (k == 1) return symbolic::eval_I_weight_one(omega);
  return symbolic::eval_I_closed(static_cast<int>(k), omega);
}

std::string param_name(const std::string& family, const std::string& params) { return family + "(" + params + ")"; }

}  // namespace

Identity functional_equation(long k, const SurdGaussian& omega, const std::optional<SymbolicValue>& constant_override) {
  require_odd(k, 1, "functional_equation");
  const SurdGaussian scale = omega.pow(k - 1);
  if (!scale.is_rational()) throw DomainError("functional_equation: omega^(k-1) is not rational");
  const Rational sign = ((k - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1);
  // 0 = I - S(w) + sign w^(k-1) S(1/w)
  return Identity("functional-equation", constant_override.value_or(contour_value(k, omega)),
                  {{Rational(-1), SumTerm::S(k, omega)},
                   {sign * scale.coefficient().re, SumTerm::S(k, omega.inverse())}});
}

Identity periodicity(long s, const SurdGaussian& omega) {
  if (omega.surd() != 1) throw DomainError("periodicity: surd arguments are not supported");
  const SurdGaussian shifted(omega.coefficient() + GaussianRational::i());
  return Identity("periodicity", SymbolicValue(),
                  {{Rational(1), SumTerm::S(s, shifted)}, {Rational(-1), SumTerm::S(s, omega)}});
}

Identity rearrangement(long s, const SurdGaussian& omega) {
  const SurdGaussian twice = omega * SurdGaussian(2);
  return Identity("rearrangement", SymbolicValue(),
                  {{Rational(1), SumTerm::T(s, omega)},
                   {Rational(-1), SumTerm::S(s, omega)},
                   {Rational(2), SumTerm::S(s, twice)}});
}

Identity half_period_shift(long s, const SurdGaussian& omega) {
  if (omega.surd() != 1) throw DomainError("half_period_shift: surd arguments are not supported");
  // x - i pi corresponds to omega - i/2
  const SurdGaussian shifted(omega.coefficient() - GaussianRational(Rational(0), Rational(1, 2)));
  const SurdGaussian twice = omega * SurdGaussian(2);
  const Rational p = Rational(2).pow(-s);
  return Identity("half-period-shift", SymbolicValue(),
                  {{Rational(1), SumTerm::S(s, shifted)},
                   {-p, SumTerm::S(s, twice)},
                   {Rational(1), SumTerm::T(s, omega)},
                   {-p, SumTerm::T(s, twice)}});
}

Identity zeta4m_minus_1(long m) {
  if (m < 1) throw DomainError("zeta4m_minus_1 requires m >= 1");
  const long k = 4 * m - 1;
  const Identity fe = functional_equation(k, SurdGaussian(1));
  return normalize_atom(fe, BasisAtom::zeta(static_cast<int>(k))).renamed(param_name("zeta4m-1", "m=" + std::to_string(m)));
}

Identity pq(long k, long p, long q) {
  require_odd(k, 3, "pq");
  if (k % 4 != 3) throw DomainError("pq requires k = 3 mod 4");
  if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw DomainError("pq requires coprime positive p and q");
  if (p == q) throw DomainError("pq with p = q reduces to the x = 2 pi relation");
  const Identity fe = functional_equation(k, SurdGaussian(Rational(p, q)));
  return normalize_atom(fe, BasisAtom::zeta(static_cast<int>(k)))
      .renamed(param_name("pq", "k=" + std::to_string(k) + ",p=" + std::to_string(p) + ",q=" + std::to_string(q)));
}

Identity surd(long k, long p) {
  require_odd(k, 3, "surd");
  if (p < 2) throw DomainError("surd requires p >= 2");
  if (exact::squarefree_decompose(p).second == 1) throw DomainError("surd requires p not a perfect square");
  const Identity fe = functional_equation(k, SurdGaussian::sqrt(p));
  return normalize_atom(fe, BasisAtom::zeta(static_cast<int>(k)))
      .renamed(param_name("surd", "k=" + std::to_string(k) + ",p=" + std::to_string(p)));
}

namespace {

// S and T at 2 pi from the relations at 2 pi (1+i) and pi, for k = 1 mod 4.
Identity plus_family(long k, const std::optional<SymbolicValue>& override_1pi) {
  const SurdGaussian one(1);
  const SurdGaussian half(Rational(1, 2));
  const SurdGaussian one_plus_i(GaussianRational(1, 1));
  const SurdGaussian half_minus(GaussianRational(Rational(1, 2), Rational(-1, 2)));

  const Identity r1 = functional_equation(k, one_plus_i, override_1pi);
  const Identity r2 = periodicity(k, one);
  const Identity r3 = half_period_shift(k, half);
  const Identity r4 = rearrangement(k, half);
  const Identity r5 = functional_equation(k, half);
  const Identity r6 = rearrangement(k, one);

  Identity acc = eliminate_term(r1, r2, SumTerm::S(k, one_plus_i));
  acc = eliminate_term(acc, r3, SumTerm::S(k, half_minus));
  acc = eliminate_term(acc, r4, SumTerm::T(k, half));
  acc = eliminate_term(acc, r5, SumTerm::S(k, half));
  acc = eliminate_term(acc, r6, SumTerm::S(k, SurdGaussian(2)));
  return acc;
}

}  // namespace

Identity zeta4m_plus_1(long m) {
  if (m < 1) throw DomainError("zeta4m_plus_1 requires m >= 1");
  const long k = 4 * m + 1;
  return normalize_atom(plus_family(k, std::nullopt), BasisAtom::zeta(static_cast<int>(k)))
      .renamed(param_name("zeta4m+1", "m=" + std::to_string(m)));
}

Identity pi_power(long m) {
  if (m < 1) throw DomainError("pi_power requires m >= 1");
  const long k = 4 * m - 1;
  const Identity eliminated = eliminate_atom(zeta4m_minus_1(m), pq(k, 2, 1), BasisAtom::zeta(static_cast<int>(k)));
  return normalize_atom(eliminated, BasisAtom::pi_pow(static_cast<int>(k)))
      .renamed(param_name("pi-power", "m=" + std::to_string(m)));
}

Identity log2_m0() {
  const Identity raw = plus_family(1, std::nullopt);
  // Written as sum = constant, so the terms carry the positive sign.
  Identity out = normalize_integer(raw);
  if (out.terms().front().coeff.sign() < 0) out = out.scaled(Rational(-1));
  return out.renamed("log2(m=0)");
}

Identity generate(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::Zeta4mMinus1: return zeta4m_minus_1(params.m);
    case Family::PQ: return pq(params.k, params.p, params.q);
    case Family::Surd: return surd(params.k, params.p);
    case Family::Zeta4mPlus1: return zeta4m_plus_1(params.m);
    case Family::PiPower: return pi_power(params.m);
    case Family::Log2M0: return log2_m0();
  }
  throw DomainError("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "zeta4m-1") return Family::Zeta4mMinus1;
  if (name == "pq") return Family::PQ;
  if (name == "surd") return Family::Surd;
  if (name == "zeta4m+1") return Family::Zeta4mPlus1;
  if (name == "pi-power") return Family::PiPower;
  if (name == "log2") return Family::Log2M0;
  throw ParseError("unknown identity family '" + name + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Zeta4mMinus1: return "zeta4m-1";
    case Family::PQ: return "pq";
    case Family::Surd: return "surd";
    case Family::Zeta4mPlus1: return "zeta4m+1";
    case Family::PiPower: return "pi-power";
    case Family::Log2M0: return "log2";
  }
  return "?";
}

Identity printed_binomial_display(long m) {
  if (m < 1) throw DomainError("printed_binomial_display requires m >= 1");
  const long k = 4 * m - 1;
  Rational sum;
  for (long j = 0; j <= 2 * m; ++j) {
    const Rational term = Rational(exact::binomial(4 * m, 2 * j)) * exact::bernoulli(2 * j) *
                          exact::bernoulli(4 * m - 2 * j);
    sum += j % 2 == 0 ? term : -term;
  }
  // 0 = zeta + 2 S - (2 pi)^k / (4m)! * sum
  SymbolicValue constant(BasisAtom::zeta(static_cast<int>(k)), SurdGaussian(1));
  constant.add(BasisAtom::pi_pow(static_cast<int>(k)),
               SurdGaussian(-Rational(2).pow(k) / Rational(exact::factorial(4 * m)) * sum));
  return Identity("printed-binomial-display(m=" + std::to_string(m) + ")", constant,
                  {{Rational(2), SumTerm::S(k, SurdGaussian(1))}});
}

Identity printed_i5_constant() {
  SymbolicValue printed(BasisAtom::zeta(5), SurdGaussian(Rational(-5, 2)));
  printed.add(BasisAtom::pi_pow(5), SurdGaussian(Rational(1, 135)));
  return normalize_atom(plus_family(5, printed), BasisAtom::zeta(5)).renamed("printed-i5-constant");
}

Identity printed_pq7_display() {
  SymbolicValue constant(BasisAtom::zeta(7), SurdGaussian(1));
  constant.add(BasisAtom::pi_pow(7), SurdGaussian(Rational(-409, 94500)));
  return Identity("printed-pq7-display", constant,
                  {{Rational(8, 5), SumTerm::S(7, SurdGaussian(Rational(1, 2)))},
                   {Rational(2, 5), SumTerm::S(7, SurdGaussian(2))}});
}

Identity printed_surd_constant() {
  SymbolicValue constant(BasisAtom::zeta(3), SurdGaussian(1));
  constant.add(BasisAtom::pi_pow(3), SurdGaussian(Rational(-5, 72)));
  const SurdGaussian root3 = SurdGaussian::sqrt(3);
  return Identity("printed-surd-constant", constant,
                  {{Rational(1, 2), SumTerm::S(3, root3)}, {Rational(3, 2), SumTerm::S(3, root3.inverse())}});
}

Identity printed_zeta4m_plus_1_display(long m) {
  if (m < 1) throw DomainError("printed_zeta4m_plus_1_display requires m >= 1");
  using exact::bernoulli_over_factorial;
  const long k = 4 * m + 1;
  const Rational minus4_m = Rational(-4).pow(m);
  const Rational two_k = Rational(2).pow(k);
  Rational first;
  for (long j = 0; j <= m; ++j) {
    first += Rational(-4).pow(m + j) * bernoulli_over_factorial(4 * m - 4 * j + 2) * bernoulli_over_factorial(4 * j);
  }
  Rational second;
  for (long j = 0; j <= 2 * m + 1; ++j) {
    second += Rational(-4).pow(j) * bernoulli_over_factorial(4 * m - 2 * j + 2) * bernoulli_over_factorial(2 * j);
  }
  // [1 + (-4)^m - 2^k] zeta = 2 T + 2 [2^k - (-4)^m] S + (2 pi)^k (first + second / 2)
  SymbolicValue constant(BasisAtom::zeta(static_cast<int>(k)), SurdGaussian(Rational(1) + minus4_m - two_k));
  constant.add(BasisAtom::pi_pow(static_cast<int>(k)), SurdGaussian(-two_k * (first + second / Rational(2))));
  return Identity("printed-zeta4m+1-display(m=" + std::to_string(m) + ")", constant,
                  {{Rational(-2), SumTerm::T(k, SurdGaussian(1))},
                   {Rational(-2) * (two_k - minus4_m), SumTerm::S(k, SurdGaussian(1))}});
}

}  // namespace zforge::identities
