#include "zforge/exact/arith.hpp"

#include "zforge/errors.hpp"

namespace zforge::exact {

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("binomial requires 0 <= k <= n");
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational harmonic(long n) {
  if (n < 1) throw DomainError("harmonic number requires n >= 1");
  Rational h(0);
  for (long j = 1; j <= n; ++j) h += Rational(1, j);
  return h;
}

Rational divisor_sigma(long s, std::int64_t m) {
  if (m < 1) throw DomainError("divisor_sigma requires m >= 1");
  Rational total(0);
  auto add = [&](std::int64_t d) { total += Rational(Integer(static_cast<long>(d))).pow(s); };
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    add(d);
    if (d != m / d) add(m / d);
  }
  return total;
}

std::pair<std::int64_t, std::int64_t> squarefree_decompose(std::int64_t n) {
  if (n < 1) throw DomainError("squarefree decomposition requires n >= 1");
  std::int64_t square = 1;
  std::int64_t core = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2 == 1) core *= p;
  }
  core *= n;
  return {square, core};
}

bool is_squarefree(std::int64_t n) { return n >= 1 && squarefree_decompose(n).first == 1; }

}  // namespace zforge::exact
