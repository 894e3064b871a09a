#pragma once

#include <string>
#include <vector>

#include "zforge/symbolic/value.hpp"

namespace zforge::identities {

using exact::Rational;
using symbolic::BasisAtom;
using symbolic::SurdGaussian;
using symbolic::SymbolicValue;

/// One exponential series: S_s(x), T_s(x), or the odd-index sum
/// sum_{n odd} 1/(n^s (e^(n pi) + 1)). The argument is x = 2 pi omega.
struct SumTerm {
  enum class Kind { S, T, OddApostol };

  Kind kind = Kind::S;
  long s = 0;
  /// Fixed at 1/2 (x = pi) for OddApostol.
  SurdGaussian omega;

  /// DomainError unless Re(omega) > 0.
  static SumTerm S(long s, const SurdGaussian& omega);
  static SumTerm T(long s, const SurdGaussian& omega);
  static SumTerm odd_apostol(long s);

  friend bool operator==(const SumTerm&, const SumTerm&) = default;
};

/// Orders by kind, then s, then the numeric size of omega.
bool operator<(const SumTerm& a, const SumTerm& b);

std::string kind_name(SumTerm::Kind kind);

struct LinearTerm {
  Rational coeff;
  SumTerm term;
};

/// constant + sum coeff * term = 0.
///
/// Terms are kept sorted with duplicates merged and zero coefficients
/// dropped. The constant must be real; `require_canonical` additionally
/// rejects negative pi powers and pi-multiplied zeta or log atoms.
class Identity {
 public:
  Identity() = default;
  Identity(std::string name, SymbolicValue constant, std::vector<LinearTerm> terms, bool require_canonical = true);

  const std::string& name() const { return name_; }
  const SymbolicValue& constant() const { return constant_; }
  const std::vector<LinearTerm>& terms() const { return terms_; }

  Rational coefficient(const SumTerm& term) const;
  bool contains(const SumTerm& term) const { return !coefficient(term).is_zero(); }
  /// Trivial relation 0 = 0.
  bool is_trivial() const { return constant_.is_zero() && terms_.empty(); }

  Identity renamed(std::string name) const;
  Identity scaled(const Rational& factor) const;
  friend Identity operator+(const Identity& a, const Identity& b);
  friend Identity operator-(const Identity& a, const Identity& b);

  friend bool operator==(const Identity& a, const Identity& b);

 private:
  std::string name_;
  SymbolicValue constant_;
  std::vector<LinearTerm> terms_;
};

/// a - (c_a / c_b) b, which no longer contains `term`.
Identity eliminate_term(const Identity& a, const Identity& b, const SumTerm& term);

/// Linear combination of a and b with `atom` removed from the constant,
/// scaled so the term coefficients are coprime integers and the constant's
/// leading coefficient is positive. DomainError if the atom is missing
/// from either side; DegenerateResultError if the combination is 0 = 0.
Identity eliminate_atom(const Identity& a, const Identity& b, const BasisAtom& atom);

/// Positive rational multiple with coprime integer term coefficients; the
/// sign makes the constant's leading coefficient positive (or, with a zero
/// constant, the first term coefficient).
Identity normalize_integer(const Identity& id);

/// Scales so the given atom has coefficient 1 in the constant.
Identity normalize_atom(const Identity& id, const BasisAtom& atom);

}  // namespace zforge::identities
