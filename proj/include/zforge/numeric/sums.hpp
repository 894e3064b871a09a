#pragma once

#include "zforge/numeric/complex.hpp"
#include "zforge/numeric/context.hpp"
#include "zforge/numeric/series.hpp"

namespace zforge::numeric {

/// S_s(x) = sum_{n>=1} 1 / (n^s (e^(xn) - 1)), Re x > 0. Negative s gives
/// the power sums sum n^|s| / (e^(xn) - 1).
Complex sum_S(long s, const Complex& x, const PrecisionContext& ctx);
/// T_s(x) = sum_{n>=1} 1 / (n^s (e^(xn) + 1)), Re x > 0.
Complex sum_T(long s, const Complex& x, const PrecisionContext& ctx);

/// Same sums with the truncation index and error bound exposed. With
/// `terms` > 0 exactly that many terms are taken and the bound describes
/// the remainder; otherwise the index is chosen from the tail bound.
SeriesResult sum_S_detailed(long s, const Complex& x, const PrecisionContext& ctx, long terms = 0);
SeriesResult sum_T_detailed(long s, const Complex& x, const PrecisionContext& ctx, long terms = 0);

/// T_s restricted to odd n.
Complex sum_T_odd(long s, const Complex& x, const PrecisionContext& ctx);
/// sum over odd n of n^(4k+1) / (1 + e^(n pi)), k >= 0.
Complex odd_apostol_sum(long k, const PrecisionContext& ctx);

/// I_k(x) from its residue expansion with floating x:
///   zeta(k+1)/x + sum_{n=0..k, n != k-1} (-x)^n/n! zeta(k-n) zeta(-n)
///   + (-x)^(k-1)/(k-1)! zeta'(1-k)
/// k odd >= 3, x != 0.
Complex numeric_I(long k, const Complex& x, const PrecisionContext& ctx);

}  // namespace zforge::numeric
