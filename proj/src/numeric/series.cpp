#include "zforge/numeric/series.hpp"

namespace zforge::numeric {

double log_power_geometric_tail(long s, double log_r, long N) {
  const double n1 = static_cast<double>(N + 1);
  const double growth = s < 0 ? static_cast<double>(-s) * std::log1p(1.0 / n1) : 0.0;
  const double log_rho = log_r + growth;
  if (log_rho >= 0.0) return std::numeric_limits<double>::infinity();
  return -static_cast<double>(s) * std::log(n1) + n1 * log_r - std::log(-std::expm1(log_rho));
}

}  // namespace zforge::numeric
