#include "zforge/exact/bernoulli.hpp"

#include <memory>
#include <mutex>
#include <string>

#include "zforge/errors.hpp"
#include "zforge/exact/arith.hpp"

namespace zforge::exact {

std::vector<Rational> BernoulliTable::by_recurrence(std::size_t max_index) {
  std::vector<Rational> b(max_index + 1);
  b[0] = Rational(1);
  for (std::size_t n = 1; n <= max_index; ++n) {
    if (n >= 3 && n % 2 == 1) {
      b[n] = Rational(0);
      continue;
    }
    // B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j
    Rational acc(0);
    Integer c(1);  // C(n+1, 0)
    for (std::size_t j = 0; j < n; ++j) {
      if (!b[j].is_zero()) acc += Rational(c) * b[j];
      c = c * static_cast<unsigned long>(n + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    b[n] = -acc / Rational(static_cast<long>(n + 1));
  }
  return b;
}

std::vector<Rational> BernoulliTable::by_akiyama_tanigawa(std::size_t max_index) {
  std::vector<Rational> b(max_index + 1);
  std::vector<Rational> a(max_index + 1);
  for (std::size_t m = 0; m <= max_index; ++m) {
    a[m] = Rational(1, static_cast<long>(m + 1));
    for (std::size_t j = m; j >= 1; --j) {
      a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
    }
    b[m] = a[0];
  }
  if (max_index >= 1) b[1] = -b[1];
  return b;
}

BernoulliTable::BernoulliTable(std::size_t max_index) : values_(by_recurrence(max_index)) {
  const auto check = by_akiyama_tanigawa(max_index);
  for (std::size_t n = 0; n <= max_index; ++n) {
    if (check[n] != values_[n]) {
      throw Error("Bernoulli generators disagree at index " + std::to_string(n));
    }
  }
}

namespace {

std::mutex g_table_mutex;
std::shared_ptr<const BernoulliTable> g_table;

std::shared_ptr<const BernoulliTable> table_covering(std::size_t n) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  if (!g_table || g_table->max_index() < n) {
    std::size_t size = g_table ? g_table->max_index() : 64;
    while (size < n) size *= 2;
    g_table = std::make_shared<const BernoulliTable>(size);
  }
  return g_table;
}

}  // namespace

Rational bernoulli(long n) {
  if (n < 0) throw DomainError("bernoulli: negative index");
  if (n >= 3 && n % 2 == 1) return Rational(0);
  return (*table_covering(static_cast<std::size_t>(n)))[static_cast<std::size_t>(n)];
}

Rational bernoulli_over_factorial(long n) { return bernoulli(n) / Rational(factorial(n)); }

}  // namespace zforge::exact
