#pragma once

#include "zforge/numeric/complex.hpp"
#include "zforge/numeric/context.hpp"

namespace zforge::numeric {

struct MellinResult {
  Real value;
  /// log10 of the bound on the integral beyond |Im r| > H.
  double log10_tail_bound;
  /// log10 of |Q(h) - Q(h/2)| at the final step size.
  double log10_discretization;
  double step;
  long nodes;
};

/// Trapezoid quadrature of (1/2 pi i) int_{c-iH}^{c+iH} Gamma(r) zeta(r+s) u^(-r) dr,
/// which approximates Li_s(e^-u). The step is halved until successive
/// values agree to 10^-P, or to the tail bound when that is larger; if the tail beyond H exceeds 10^-(P-G), or the
/// halving fails to settle, PrecisionError is raised.
MellinResult mellin_barnes_check(long s, const Real& u, const Real& c, const Real& H, const PrecisionContext& ctx);

}  // namespace zforge::numeric
