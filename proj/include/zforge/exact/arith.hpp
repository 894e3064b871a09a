#pragma once

#include <cstdint>
#include <utility>

#include "zforge/exact/rational.hpp"

namespace zforge::exact {

Integer factorial(long n);

/// n! / (k! (n-k)!); DomainError unless 0 <= k <= n.
Integer binomial(long n, long k);

/// H_n = sum_{j=1}^{n} 1/j; DomainError for n < 1.
Rational harmonic(long n);

/// sigma_s(m) = sum over divisors d of m of d^s. Rational because s may be
/// negative. DomainError for m < 1.
Rational divisor_sigma(long s, std::int64_t m);

/// Writes n = square^2 * core with core squarefree; returns {square, core}.
/// DomainError for n < 1.
std::pair<std::int64_t, std::int64_t> squarefree_decompose(std::int64_t n);

bool is_squarefree(std::int64_t n);

}  // namespace zforge::exact
