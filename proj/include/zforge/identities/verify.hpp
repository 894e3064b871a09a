#pragma once

#include <string>
#include <vector>

#include "zforge/identities/identity.hpp"
#include "zforge/numeric/complex.hpp"
#include "zforge/numeric/context.hpp"

namespace zforge::identities {

struct VerifyResult {
  std::string name;
  numeric::Complex residual;
  /// log10 max(1, largest |piece|), where the pieces are the constant's
  /// atom contributions and each coeff * term.
  double log10_scale = 0.0;
  /// PASS iff |residual| <= 10^(log10_tolerance).
  double log10_tolerance = 0.0;
  bool pass = false;

  double log10_residual() const { return numeric::abs(residual).log10_abs(); }
};

numeric::Complex term_value(const SumTerm& term, const numeric::PrecisionContext& ctx);

/// constant + sum coeff * term, judged against 10^-(P-G) relative to the scale.
VerifyResult verify(const Identity& id, const numeric::PrecisionContext& ctx);

/// Verifies each identity, using up to `threads` workers (0 = hardware
/// concurrency). Results are in input order.
std::vector<VerifyResult> verify_all(const std::vector<Identity>& ids, const numeric::PrecisionContext& ctx,
                                     unsigned threads = 0);

}  // namespace zforge::identities
