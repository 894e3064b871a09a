#include "zforge/identities/bernoulli_identities.hpp"

#include <string>

#include "zforge/errors.hpp"
#include "zforge/exact/bernoulli.hpp"

namespace zforge::identities {

namespace {

void require_m(long m, const char* what) {
  if (m < 1) throw DomainError(std::string(what) + " requires m >= 1");
}

Rational b(long n) { return exact::bernoulli_over_factorial(n); }

}  // namespace

Rational cor5(long m) {
  require_m(m, "cor5");
  Rational sum;
  for (long j = 0; j <= 2 * m + 1; ++j) {
    const Rational t = b(4 * m - 2 * j + 2) * b(2 * j);
    sum += j % 2 == 0 ? t : -t;
  }
  return sum;
}

Rational thm10(long m) {
  require_m(m, "thm10");
  Rational sum;
  Rational power(1);
  for (long j = 0; j <= m; ++j, power *= Rational(-4)) {
    sum += power * (b(4 * m - 4 * j + 2) * b(4 * j) + Rational(2) * b(4 * m - 4 * j) * b(4 * j + 2));
  }
  return sum;
}

std::pair<Rational, Rational> thm11(long m) {
  require_m(m, "thm11");
  Rational lhs;
  for (long k = 0; k <= 2 * m; ++k) {
    const Rational t = b(4 * m - 2 * k) * b(2 * k);
    lhs += k % 2 == 0 ? t : -t;
  }
  Rational rhs;
  Rational power(1);
  for (long j = 0; j <= m; ++j, power *= Rational(-4)) {
    rhs += power * b(4 * m - 4 * j) * b(4 * j);
    if (j < m) rhs -= Rational(2) * power * b(4 * m - 4 * j - 2) * b(4 * j + 2);
  }
  return {lhs, rhs};
}

}  // namespace zforge::identities
