#pragma once

#include <mpfr.h>

namespace zforge::numeric {

/// Requested decimal precision plus guard digits. Immutable; passed by value
/// to every numeric routine.
class PrecisionContext {
 public:
  static constexpr int kMinDigits = 10;
  static constexpr int kMaxDigits = 10000;

  explicit PrecisionContext(int digits = 50, int guard = 10);

  int digits() const { return digits_; }
  int guard() const { return guard_; }
  /// Working precision in bits, covering digits + guard decimal digits.
  mpfr_prec_t bits() const;
  /// Decimal exponent E such that truncation errors target 10^-E.
  int truncation_digits() const { return digits_ + guard_ / 2; }
  /// Decimal exponent of the verification tolerance 10^-(P-G).
  int verify_digits() const { return digits_ - guard_; }

  /// Context with more guard digits, used for internal cross-checks.
  PrecisionContext widened(int extra_digits) const { return PrecisionContext(digits_ + extra_digits, guard_); }

 private:
  int digits_;
  int guard_;
};

}  // namespace zforge::numeric
