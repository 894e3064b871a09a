#pragma once

#include "zforge/exact/rational.hpp"
#include "zforge/symbolic/value.hpp"

namespace zforge::exact {

/// zeta(2n) / pi^(2n) = (-1)^(n+1) 2^(2n-1) B_2n / (2n)!, n >= 0.
Rational zeta_even_over_pi_power(long n);

/// zeta(-n) for n >= 0: -B_(n+1)/(n+1), with zeta(0) = -1/2 special-cased
/// because B_1 = -1/2 here.
Rational zeta_negative(long n);

/// Exact special values of the Riemann zeta function.
struct ZetaRequest {
  enum class Kind {
    Even,            ///< zeta(2n), n >= 0
    Negative,        ///< zeta(-n), n >= 0
    DerivNegEven     ///< zeta'(-2n), n >= 1
  };
  Kind kind;
  long n;

  static ZetaRequest even(long two_n);
  static ZetaRequest negative(long n) { return {Kind::Negative, n}; }
  static ZetaRequest deriv_neg_even(long two_n);
};

/// even(2n)  -> rational * pi^(2n)
/// neg(n)    -> rational
/// deriv(2n) -> (-1)^n (2n)! / (2 (2 pi)^(2n)) * zeta(2n+1), a value with
///              a negative pi power.
symbolic::SymbolicValue zeta_special(const ZetaRequest& request);

}  // namespace zforge::exact
