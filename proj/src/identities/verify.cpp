#include "zforge/identities/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "zforge/numeric/evaluate.hpp"
#include "zforge/numeric/sums.hpp"

namespace zforge::identities {

using numeric::Complex;
using numeric::PrecisionContext;

Complex term_value(const SumTerm& term, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Complex x = numeric::to_complex(term.omega, bits) * (numeric::Real::pi(bits) * 2L);
  switch (term.kind) {
    case SumTerm::Kind::S: return numeric::sum_S(term.s, x, ctx);
    case SumTerm::Kind::T: return numeric::sum_T(term.s, x, ctx);
    case SumTerm::Kind::OddApostol: return numeric::sum_T_odd(term.s, x, ctx);
  }
  return Complex(ctx.bits());
}

VerifyResult verify(const Identity& id, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  VerifyResult out{id.name(), Complex(bits)};
  double log10_scale = 0.0;
  auto account = [&](const Complex& piece) {
    out.residual += piece;
    log10_scale = std::max(log10_scale, numeric::abs(piece).log10_abs());
  };
  for (const auto& t : id.constant().terms()) {
    account(numeric::eval_symbolic(SymbolicValue(t.atom, t.coefficient), ctx));
  }
  for (const auto& t : id.terms()) {
    account(term_value(t.term, ctx) * numeric::Real::from_rational(t.coeff, bits));
  }
  out.log10_scale = log10_scale;
  out.log10_tolerance = log10_scale - ctx.verify_digits();
  out.pass = out.log10_residual() <= out.log10_tolerance;
  return out;
}

std::vector<VerifyResult> verify_all(const std::vector<Identity>& ids, const PrecisionContext& ctx,
                                     unsigned threads) {
  std::vector<VerifyResult> results(ids.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, ids.size())));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(ids.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      try {
        results[i] = verify(ids[i], ctx);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace zforge::identities
