#pragma once

#include <string>

#include "zforge/qplane/qseries.hpp"
#include "zforge/symbolic/value.hpp"

namespace zforge::qplane {

/// P_k(tau) = sum 1/(n^k (e^(2 pi i n tau) - 1)): S_k(2 pi i tau) for Im tau < 0,
/// the q-series at q = e^(2 pi i tau) for Im tau > 0. DomainError on the real axis.
Complex P_tau(long k, const Complex& tau, const PrecisionContext& ctx);

/// K_k(tau) = ((tau^(k-1) - 1)/2) zeta(k)
///            - ((2 pi i)^k / (2 tau)) sum_{j=0}^{(k+1)/2} tau^2j b_2j b_{k+1-2j}; odd k >= 3.
Complex K_tau(long k, const Complex& tau, const PrecisionContext& ctx);

/// M_k = P_k - K_k / 2.
Complex M_tau(long k, const Complex& tau, const PrecisionContext& ctx);

enum class ModularLaw {
  /// P(tau + 1) = P(tau)
  Periodicity,
  /// P(-1/tau) = tau^(1-k) P(tau) + K(-1/tau)
  Inversion,
  /// K(-1/tau) = -tau^(1-k) K(tau)
  KQuasi,
  /// M(-1/tau) = tau^(1-k) M(tau)
  MTransform,
  /// M(-1/tau) = -tau^(1-k) M(tau), the sign as printed; does not hold.
  MTransformAsPrinted,
};

struct ModularResult {
  Complex residual;
  /// log10 max(1, largest |side|).
  double log10_scale = 0.0;

  double log10_residual() const { return numeric::abs(residual).log10_abs(); }
  /// |residual| <= 10^-digits relative to the scale.
  bool within(int digits) const { return log10_residual() <= log10_scale - digits; }
};

/// LHS - RHS of the law at a floating tau; k odd >= 3, tau off the real axis.
ModularResult modular_check(ModularLaw law, long k, const Complex& tau, const PrecisionContext& ctx);

/// Same, with K taken from its exact value at an exactly representable tau.
ModularResult modular_check(ModularLaw law, long k, const symbolic::SurdGaussian& tau, const PrecisionContext& ctx);

/// Exact K(-1/tau) + tau^(1-k) K(tau); the zero value when the law holds.
symbolic::SymbolicValue k_quasi_exact(long k, const symbolic::SurdGaussian& tau);

ModularLaw modular_law_from_name(const std::string& name);
std::string modular_law_name(ModularLaw law);

}  // namespace zforge::qplane
