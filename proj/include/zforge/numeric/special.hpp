#pragma once

#include "zforge/numeric/complex.hpp"
#include "zforge/numeric/context.hpp"

namespace zforge::numeric {

/// Riemann zeta by Euler-Maclaurin summation. s = 1 raises PoleError.
Complex zeta_complex(const Complex& s, const PrecisionContext& ctx);
Real zeta_real(long s, const PrecisionContext& ctx);

/// Gamma by shifted Stirling series, with reflection for Re z < 1/2.
/// Non-positive integers raise PoleError.
Complex gamma_complex(const Complex& z, const PrecisionContext& ctx);

/// Li_s(z) = sum z^n / n^s for |z| < 1, and for |z| = 1 when s >= 2.
/// Near the unit circle the expansion in mu = log z is used instead of the
/// slowly converging power series.
Complex polylog_series(long s, const Complex& z, const PrecisionContext& ctx);

}  // namespace zforge::numeric
