#include "zforge/numeric/context.hpp"

#include <cmath>
#include <string>

#include "zforge/errors.hpp"

namespace zforge::numeric {

PrecisionContext::PrecisionContext(int digits, int guard) : digits_(digits), guard_(guard) {
  if (digits < 1) throw DomainError("precision must be positive, got " + std::to_string(digits));
  if (guard < 1) throw DomainError("guard digits must be positive, got " + std::to_string(guard));
}

mpfr_prec_t PrecisionContext::bits() const {
  return static_cast<mpfr_prec_t>(std::ceil((digits_ + guard_) * 3.3219280948873623)) + 8;
}

}  // namespace zforge::numeric
