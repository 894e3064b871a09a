#pragma once

#include "zforge/numeric/complex.hpp"
#include "zforge/numeric/context.hpp"

namespace zforge::qplane {

using numeric::Complex;
using numeric::PrecisionContext;

/// Largest |q| accepted by the q-series evaluators.
inline constexpr double kDefaultRMax = 0.995;
inline constexpr long kDefaultMaxTerms = 2'000'000;

enum class Representation {
  /// -zeta(s) - sum_n n^-s q^n / (1 - q^n): the series sum_n 1/(n^s (q^n - 1))
  /// with its -sum n^-s part summed exactly. Converges for every s.
  Lambert,
  /// -zeta(s) - sum_m sigma_{-s}(m) q^m.
  Divisor,
};

/// P_s(q) = sum_{n>=1} 1 / (n^s (q^n - 1)), continued to all integers s != 1.
/// DomainError for |q| >= r_max; PoleError at s = 1; PrecisionError when
/// max_terms is reached before the tail bound.
Complex P_q(long s, const Complex& q, const PrecisionContext& ctx, Representation rep = Representation::Lambert,
            double r_max = kDefaultRMax, long max_terms = kDefaultMaxTerms);

/// G_2k(q) = 2 zeta(2k) + 2 (2 pi i)^2k / (2k-1)! sum_m sigma_{2k-1}(m) q^m, 2k >= 4 even.
/// Lambert uses sum_n n^(2k-1) q^n / (1 - q^n).
Complex eisenstein_G(long k2, const Complex& q, const PrecisionContext& ctx,
                     Representation rep = Representation::Divisor, double r_max = kDefaultRMax);

/// g3(q) = (8 pi^6 / 27) [1 - 504 sum_n n^5 q^n / (1 - q^n)].
Complex g3(const Complex& q, const PrecisionContext& ctx, Representation rep = Representation::Lambert,
           double r_max = kDefaultRMax);

}  // namespace zforge::qplane
