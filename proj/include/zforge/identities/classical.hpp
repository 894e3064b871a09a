#pragma once

#include <string>
#include <vector>

#include "zforge/identities/verify.hpp"

namespace zforge::identities {

enum class Classical { Letter, Glaisher, Apostol, Entry13, Entry21, Entry8, Zucker };

/// Positive real coeff * pi^pi_power with pi_power 0 or 1.
struct Scale {
  Rational coeff{1};
  int pi_power = 1;

  numeric::Real value(mpfr_prec_t bits) const;
  std::string to_string() const;
};

/// "pi", "2pi", "2*pi", "pi/2", "3pi/4", "2", "3/2". ParseError otherwise.
Scale parse_scale(const std::string& text);

struct ClassicalParams {
  long k = 1;
  long n = 1;
  /// alpha for the entries, x for zucker.
  Scale alpha;
};

/// letter:    sum n^13 / (e^(2 pi n) - 1) = 1/24
/// glaisher:  S_{-(4k+1)}(2 pi) = B_{4k+2} / (4(2k+1)), k >= 1
/// apostol:   sum_{n odd} n^(4k+1) / (e^(pi n) + 1) = (2^(4k+1) - 1) B_{4k+2} / (8k+4), k >= 0
/// entry13:   a^k S_{1-2k}(2a) - (-b)^k S_{1-2k}(2b) = (a^k - (-b)^k) B_2k / 4k, ab = pi^2, k >= 2
/// entry21:   a^-n (zeta(2n+1)/2 + S_{2n+1}(2a)) = (-b)^-n (zeta(2n+1)/2 + S_{2n+1}(2b))
///              - 2^2n sum_{j=0}^{n+1} (-1)^j b_2j b_{2n+2-2j} a^(n+1-j) b^j,  ab = pi^2, n >= 1
/// entry8:    a sum sinh(2ank)/(e^(2a^2 n) - 1) + b sum sin(2bnk)/(e^(2b^2 n) - 1)
///              = (a/4) coth(ak) - (b/4) cot(bk) - k/2,  ab = pi, 1 <= k < a
/// zucker:    the four coth/tanh rewritings of sum (+-1)^n / (n (e^(2 pi n x) -+ 1)),
///            each side summed on its own; one result per display.
std::vector<VerifyResult> verify_classical(Classical which, const ClassicalParams& params,
                                           const numeric::PrecisionContext& ctx);

/// "letter", "glaisher", "apostol", "entry13", "entry21", "entry8", "zucker"
Classical classical_from_name(const std::string& name);
std::string classical_name(Classical which);

}  // namespace zforge::identities
