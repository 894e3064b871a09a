#pragma once

#include <cstddef>
#include <vector>

#include "zforge/exact/rational.hpp"

namespace zforge::exact {

/// Immutable table of Bernoulli numbers B_0..B_N, with B_1 = -1/2.
///
/// Construction fills the table from the defining recurrence
/// sum_{j=0}^{n} C(n+1, j) B_j = 0 and cross-checks every entry against the
/// Akiyama-Tanigawa scheme; a mismatch throws.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::size_t max_index);

  std::size_t max_index() const { return values_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return values_.at(n); }

  static std::vector<Rational> by_recurrence(std::size_t max_index);
  /// Akiyama-Tanigawa produces B_1 = +1/2; the sign is flipped on return.
  static std::vector<Rational> by_akiyama_tanigawa(std::size_t max_index);

 private:
  std::vector<Rational> values_;
};

/// B_n from a process-wide cached table that grows on demand. Thread-safe.
Rational bernoulli(long n);

/// B_n / n!.
Rational bernoulli_over_factorial(long n);

}  // namespace zforge::exact
