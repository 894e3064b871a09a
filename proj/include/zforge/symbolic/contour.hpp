#pragma once

#include "zforge/symbolic/value.hpp"

namespace zforge::symbolic {

// The contour integral I_k(x) of Gamma(z) x^-z zeta(z+k) zeta(z) around all
// poles, evaluated exactly at x = 2*pi*omega for odd k >= 3.

/// Bernoulli-pair closed form. DomainError for even k, k < 3 or omega = 0.
SymbolicValue eval_I_closed(int k, const SurdGaussian& omega);

/// Residue sum: zeta(k+1)/x + sum_{n != k-1} (-x)^n/n! zeta(k-n) zeta(-n)
/// + (-x)^(k-1)/(k-1)! zeta'(1-k). Same domain as eval_I_closed.
SymbolicValue eval_I_residue(int k, const SurdGaussian& omega);

/// K_k(tau) = I_k(2 pi i tau) through its tau-expansion. DomainError for
/// tau = 0 or invalid k.
SymbolicValue eval_K(int k, const SurdGaussian& tau);

/// I_1(2 pi omega) = pi/(12 omega) + (1/2) log(omega) - pi omega / 6.
///
/// The k = 1 contour integral has a double pole at z = 0 whose residue
/// contributes log(x / 2pi). Only arguments whose principal logarithm lies
/// in the basis are accepted: omega = 2^a or (1 +- i) 2^a.
SymbolicValue eval_I_weight_one(const SurdGaussian& omega);

}  // namespace zforge::symbolic
