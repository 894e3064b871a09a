#pragma once

#include <cmath>
#include <limits>

#include "zforge/errors.hpp"
#include "zforge/numeric/complex.hpp"

namespace zforge::numeric {

/// A truncated series value with the estimated size of what was dropped.
struct SeriesResult {
  Complex value;
  /// log10 of the truncation bound (absolute).
  double log10_error_bound = -std::numeric_limits<double>::infinity();
  /// Index of the last term included.
  long last_index = 0;
};

/// Natural log of an upper bound on sum_{n > N} n^(-s) r^n with r = e^(log_r) < 1.
/// The bound is the first omitted term over (1 - rho), rho being the ratio of
/// successive terms at n = N + 1; +inf while rho >= 1.
double log_power_geometric_tail(long s, double log_r, long N);

/// Sums term(n) for n = first, first + step, ... until log10_tail(n), a bound
/// on everything after index n, falls below 10^-digits times the running
/// sum of |terms|. Exceeding max_index raises PrecisionError.
template <typename Term, typename Tail>
SeriesResult sum_until_bound(Term&& term, Tail&& log10_tail, int digits, long first, long step, long max_index,
                             mpfr_prec_t bits) {
  SeriesResult out{Complex(bits)};
  double log10_scale = -std::numeric_limits<double>::infinity();
  for (long n = first;; n += step) {
    if (n > max_index) throw PrecisionError("series did not reach its truncation bound within " +
                                            std::to_string(max_index) + " terms");
    const Complex t = term(n);
    out.value += t;
    const double lt = abs(t).log10_abs();
    if (lt > log10_scale) log10_scale = lt + std::log10(1.0 + std::pow(10.0, log10_scale - lt));
    else if (std::isfinite(lt)) log10_scale += std::log10(1.0 + std::pow(10.0, lt - log10_scale));
    const double tail = log10_tail(n);
    if (std::isfinite(log10_scale) && tail < log10_scale - digits) {
      out.log10_error_bound = tail;
      out.last_index = n;
      return out;
    }
  }
}

}  // namespace zforge::numeric
