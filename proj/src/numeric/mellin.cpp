#include "zforge/numeric/mellin.hpp"

#include <cmath>
#include <vector>

#include "zforge/errors.hpp"
#include "zforge/numeric/special.hpp"

namespace zforge::numeric {

namespace {

// log10 of a bound on (1/pi) int_H^inf |Gamma(c+it) zeta(c+it+s) u^-(c+it)| dt,
// from |Gamma(c+it)| <~ sqrt(2 pi) t^(c-1/2) e^(-pi t/2) with a factor 2 of slack.
double log10_tail(double u, double c, double H, double zeta_cs) {
  const double a = c - 0.5;
  const double ratio = a * 2.0 / (M_PI * H);
  if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
  const double log_integral = a * std::log(H) - M_PI * H / 2.0 + std::log(2.0 / M_PI) - std::log1p(-ratio);
  const double log_bound = std::log(2.0) - std::log(M_PI) + std::log(zeta_cs) - c * std::log(u) +
                           0.5 * std::log(2.0 * M_PI) + log_integral;
  return log_bound / std::log(10.0);
}

}  // namespace

MellinResult mellin_barnes_check(long s, const Real& u, const Real& c, const Real& H, const PrecisionContext& ctx) {
  if (s < 2) throw DomainError("mellin_barnes_check requires s >= 2");
  if (u.sign() <= 0) throw DomainError("mellin_barnes_check requires u > 0");
  if (!(c > 1.0)) throw DomainError("mellin_barnes_check requires c > 1");
  if (H.sign() <= 0) throw DomainError("mellin_barnes_check requires H > 0");

  const mpfr_prec_t bits = ctx.bits();
  const double cd = c.to_double();
  // zeta(c + s) bounds |zeta(r + s)| on the line.
  const double zeta_cs =
      zeta_complex(Complex(Real(cd + static_cast<double>(s), 64)), PrecisionContext(15)).re().to_double();
  const double tail = log10_tail(u.to_double(), cd, H.to_double(), zeta_cs);
  if (tail > -ctx.verify_digits()) {
    throw PrecisionError("tail bound unmet: the integral beyond H = " + H.to_string(6) + " may exceed 1e-" +
                         std::to_string(ctx.verify_digits()));
  }

  const Real log_u = log(u.with_precision(bits));
  const Real cw = c.with_precision(bits);
  const Real Hw = H.with_precision(bits);
  const Complex shift = Complex::from_long(s, bits);
  // Re f(c + it); conjugate symmetry folds the line onto t >= 0.
  auto integrand = [&](const Real& t) {
    const Complex r(cw, t);
    const Complex f = gamma_complex(r, ctx) * zeta_complex(r + shift, ctx) * exp(-(r * log_u));
    return f.re();
  };

  long intervals = std::max<long>(8, static_cast<long>(std::ceil(H.to_double() / 0.5)));
  std::vector<Real> samples;
  for (long j = 0; j <= intervals; ++j) samples.push_back(integrand(Hw * Real::from_long(j, bits) / Real::from_long(intervals, bits)));

  const Real pi = Real::pi(bits);
  auto trapezoid = [&]() {
    Real acc = (samples.front() + samples.back()) / 2;
    for (std::size_t j = 1; j + 1 < samples.size(); ++j) acc += samples[j];
    return acc * Hw / (Real::from_long(intervals, bits) * pi);
  };

  Real previous = trapezoid();
  // Cutting the line at H leaves an endpoint term of the size of the tail,
  // so halving cannot settle below the tail bound.
  for (int level = 0; level < 8; ++level) {
    std::vector<Real> refined;
    refined.reserve(2 * samples.size());
    const long next = intervals * 2;
    for (long j = 0; j <= next; ++j) {
      if (j % 2 == 0) refined.push_back(samples[static_cast<std::size_t>(j / 2)]);
      else refined.push_back(integrand(Hw * Real::from_long(j, bits) / Real::from_long(next, bits)));
    }
    samples = std::move(refined);
    intervals = next;
    Real current = trapezoid();
    const double diff = abs(current - previous).log10_abs();
    const double scale = std::max(0.0, current.log10_abs());
    if (diff < std::max(scale - ctx.digits(), tail + 1.0)) {
      return MellinResult{current, tail, diff, H.to_double() / static_cast<double>(intervals), intervals + 1};
    }
    previous = std::move(current);
  }
  throw PrecisionError("Mellin-Barnes quadrature: step halving did not settle");
}

}  // namespace zforge::numeric
