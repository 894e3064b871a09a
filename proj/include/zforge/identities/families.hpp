#pragma once

#include <optional>
#include <string>

#include "zforge/identities/identity.hpp"

namespace zforge::identities {

// Elementary relations every family is assembled from.

/// S_k(2 pi w) = I_k(2 pi w) + (-1)^((k-1)/2) w^(k-1) S_k(2 pi / w), k odd >= 1.
/// w^(k-1) must be rational. For k = 1 only arguments whose logarithm lies
/// in span{log 2, i pi} are supported. `constant_override` replaces the
/// exact I_k value (used to replay printed constants).
Identity functional_equation(long k, const SurdGaussian& omega,
                             const std::optional<SymbolicValue>& constant_override = std::nullopt);
/// S_s(x + 2 pi i) = S_s(x).
Identity periodicity(long s, const SurdGaussian& omega);
/// T_s(x) = S_s(x) - 2 S_s(2x).
Identity rearrangement(long s, const SurdGaussian& omega);
/// S_s(x - i pi) = 2^-s S_s(2x) - T_s(x) + 2^-s T_s(2x).
Identity half_period_shift(long s, const SurdGaussian& omega);

// Families. Each result is normalized: the target zeta (or pi power) has
// coefficient 1, otherwise term coefficients are coprime integers.

/// zeta(4m-1) from the functional equation at x = 2 pi; m >= 1.
Identity zeta4m_minus_1(long m);
/// zeta(k) from x = 2 pi p / q; k = 3 mod 4, p, q >= 1 coprime.
Identity pq(long k, long p, long q);
/// zeta(k) from x = 2 pi sqrt(p); k odd >= 3, p >= 2 not a perfect square.
Identity surd(long k, long p);
/// zeta(4m+1) in terms of S and T at 2 pi; m >= 1.
Identity zeta4m_plus_1(long m);
/// pi^(4m-1) after removing zeta(4m-1) between the x = 2 pi and x = 4 pi relations; m >= 1.
Identity pi_power(long m);
/// S_1(2 pi) + T_1(2 pi) = pi/6 - (3/4) log 2.
Identity log2_m0();

enum class Family { Zeta4mMinus1, PQ, Surd, Zeta4mPlus1, PiPower, Log2M0 };

struct FamilyParams {
  long m = 1;
  long k = 3;
  long p = 2;
  long q = 1;
};

Identity generate(Family family, const FamilyParams& params);
/// "zeta4m-1", "pq", "surd", "zeta4m+1", "pi-power", "log2"
Family family_from_name(const std::string& name);
std::string family_name(Family family);

// Printed displays replayed verbatim; kept as regression fixtures that are
// expected to fail verification (except the general zeta(4m+1) display).

/// 2 S_{4m-1}(2 pi) = -zeta(4m-1) + (2 pi)^(4m-1)/(4m)! sum_j (-1)^j C(4m,2j) B_2j B_{4m-2j}.
Identity printed_binomial_display(long m);
/// The zeta(5) derivation replayed with I_5(2 pi (1+i)) = -(5/2) zeta(5) + pi^5/135.
Identity printed_i5_constant();
/// zeta(7) = (409/94500) pi^7 - (2/5) [4 S_7(pi) + S_7(4 pi)].
Identity printed_pq7_display();
/// zeta(3) = (5/72) pi^3 - (1/2) S_3(2 pi sqrt 3) - (3/2) S_3(2 pi sqrt(3)/3).
Identity printed_surd_constant();
/// The general zeta(4m+1) display with its two Bernoulli sums.
Identity printed_zeta4m_plus_1_display(long m);

}  // namespace zforge::identities
