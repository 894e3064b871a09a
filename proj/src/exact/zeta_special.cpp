#include "zforge/exact/zeta_special.hpp"

#include "zforge/errors.hpp"
#include "zforge/exact/arith.hpp"
#include "zforge/exact/bernoulli.hpp"

namespace zforge::exact {

Rational zeta_even_over_pi_power(long n) {
  if (n < 0) throw DomainError("zeta(2n) requires n >= 0");
  const Rational sign(n % 2 == 0 ? -1 : 1);
  // (2 pi)^(2n) / 2 = 2^(2n-1) pi^(2n)
  return sign * Rational(2).pow(2 * n - 1) * bernoulli(2 * n) / Rational(factorial(2 * n));
}

Rational zeta_negative(long n) {
  if (n < 0) throw DomainError("zeta(-n) requires n >= 0");
  if (n == 0) return Rational(-1, 2);
  return -bernoulli(n + 1) / Rational(n + 1);
}

ZetaRequest ZetaRequest::even(long two_n) {
  if (two_n < 0 || two_n % 2 != 0) throw DomainError("zeta_special even(2n) requires an even index >= 0");
  return {Kind::Even, two_n / 2};
}

ZetaRequest ZetaRequest::deriv_neg_even(long two_n) {
  if (two_n % 2 != 0) throw DomainError("zeta_special deriv_neg_even(2n) requires an even index");
  return {Kind::DerivNegEven, two_n / 2};
}

symbolic::SymbolicValue zeta_special(const ZetaRequest& request) {
  using symbolic::BasisAtom;
  using symbolic::SymbolicValue;
  const long n = request.n;
  switch (request.kind) {
    case ZetaRequest::Kind::Even:
      return SymbolicValue(BasisAtom::pi_pow(static_cast<int>(2 * n)), zeta_even_over_pi_power(n));
    case ZetaRequest::Kind::Negative:
      return SymbolicValue::rational(zeta_negative(n));
    case ZetaRequest::Kind::DerivNegEven: {
      if (n < 1) throw DomainError("zeta'(-2n) requires n >= 1");
      const Rational sign(n % 2 == 0 ? 1 : -1);
      // (2n)! / (2 (2 pi)^(2n)) = (2n)! / 2^(2n+1) * pi^(-2n)
      const Rational c = sign * Rational(factorial(2 * n)) / Rational(2).pow(2 * n + 1);
      return SymbolicValue(BasisAtom::zeta(static_cast<int>(2 * n + 1)).times_pi(static_cast<int>(-2 * n)), c);
    }
  }
  throw DomainError("unknown zeta request");
}

}  // namespace zforge::exact
