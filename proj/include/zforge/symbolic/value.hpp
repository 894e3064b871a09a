#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zforge/symbolic/gaussian.hpp"

namespace zforge::symbolic {

/// A basis constant pi^j * base, base in {1, zeta(k), log 2}.
///
/// The canonical basis atoms are One, PiPow(j), Zeta(k) and Log2. Products
/// pi^j * zeta(k) with j != 0 only occur in intermediate values (the zeta
/// derivative at negative even integers); they must cancel before a value
/// becomes the constant of an identity.
class BasisAtom {
 public:
  enum class Base { One, Zeta, Log2 };

  static BasisAtom one() { return BasisAtom(0, Base::One, 0); }
  /// j = 0 yields one().
  static BasisAtom pi_pow(int j) { return BasisAtom(j, Base::One, 0); }
  /// zeta(k), k >= 2. Even k is legal here; SymbolicValue reduces it.
  static BasisAtom zeta(int k);
  static BasisAtom log2() { return BasisAtom(0, Base::Log2, 0); }

  Base base() const { return base_; }
  int pi_power() const { return pi_power_; }
  int zeta_index() const { return zeta_index_; }

  bool is_one() const { return base_ == Base::One && pi_power_ == 0; }
  bool is_pi_pow() const { return base_ == Base::One && pi_power_ != 0; }
  /// One of the four canonical atoms (no pi factor on zeta or log2).
  bool is_canonical() const { return base_ == Base::One || pi_power_ == 0; }

  BasisAtom times_pi(int n) const { return BasisAtom(pi_power_ + n, base_, zeta_index_); }

  /// One < PiPow (ascending) < Zeta (ascending index, then pi power) < Log2.
  friend std::strong_ordering operator<=>(const BasisAtom& a, const BasisAtom& b);
  friend bool operator==(const BasisAtom&, const BasisAtom&) = default;

  /// Unicode display: "1", "π^3", "ζ(3)", "log2", "π^-2·ζ(3)".
  std::string display() const;
  /// ASCII form, also the JSON atom tag: "one", "pi^3", "zeta(3)", "log2", "pi^-2*zeta(3)".
  std::string tag() const;
  static BasisAtom from_tag(const std::string& tag);

 private:
  BasisAtom(int pi_power, Base base, int zeta_index)
      : pi_power_(pi_power), base_(base), zeta_index_(zeta_index) {}

  int pi_power_;
  Base base_;
  int zeta_index_;
};

/// Finite exact linear combination of basis atoms.
///
/// Coefficients are Gaussian rationals times sqrt(d); terms are keyed by
/// (atom, d) so a value like (1/2 + sqrt(3)) pi^3 keeps two entries.
/// Invariants: no stored coefficient is zero; no zeta atom has an even
/// index (zeta(2n) is rewritten as a rational multiple of pi^(2n)).
class SymbolicValue {
 public:
  struct Key {
    BasisAtom atom;
    std::int64_t surd;
    friend auto operator<=>(const Key&, const Key&) = default;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct Term {
    BasisAtom atom;
    SurdGaussian coefficient;
  };

  SymbolicValue() = default;
  SymbolicValue(const BasisAtom& atom, const SurdGaussian& coefficient) { add(atom, coefficient); }

  static SymbolicValue rational(const Rational& r) { return SymbolicValue(BasisAtom::one(), r); }

  void add(const BasisAtom& atom, const SurdGaussian& coefficient);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Terms in canonical order.
  std::vector<Term> terms() const;
  /// Coefficient of atom*sqrt(surd); zero when absent.
  GaussianRational coefficient(const BasisAtom& atom, std::int64_t surd = 1) const;
  /// True when any key uses this atom.
  bool contains(const BasisAtom& atom) const;

  SymbolicValue operator-() const;
  SymbolicValue& operator+=(const SymbolicValue& o);
  SymbolicValue& operator-=(const SymbolicValue& o);
  friend SymbolicValue operator+(SymbolicValue a, const SymbolicValue& b) { return a += b; }
  friend SymbolicValue operator-(SymbolicValue a, const SymbolicValue& b) { return a -= b; }

  SymbolicValue scaled(const SurdGaussian& factor) const;
  /// Multiplies every atom by pi^n.
  SymbolicValue times_pi(int n) const;
  /// Coefficient-wise complex conjugate.
  SymbolicValue conj() const;

  bool is_real() const;
  /// No negative pi powers and no pi*zeta / pi*log2 products.
  bool is_canonical() const;

  friend bool operator==(const SymbolicValue&, const SymbolicValue&) = default;

  const std::map<Key, GaussianRational>& raw() const { return terms_; }

 private:
  std::map<Key, GaussianRational> terms_;
};

/// Returns v when all coefficients are real; ImaginaryResidueError naming
/// the offending atom otherwise.
const SymbolicValue& assert_real(const SymbolicValue& v);

enum class RenderFormat { Text, Json };

/// Text: "(7/180)·π^3 − ζ(3)", "0" for the empty value.
/// Json: array of {"atom","re","im","surd"}.
std::string render(const SymbolicValue& v, RenderFormat format);

/// ASCII form used in identity text: "(7/180)*pi^3 - zeta(3)".
std::string render_ascii(const SymbolicValue& v);

}  // namespace zforge::symbolic
