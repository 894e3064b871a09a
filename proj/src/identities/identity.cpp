#include "zforge/identities/identity.hpp"

#include <algorithm>
#include <optional>

#include "zforge/errors.hpp"

namespace zforge::identities {

namespace {

void require_positive(const SurdGaussian& omega) {
  if (omega.coefficient().re.sign() <= 0) throw DomainError("series argument must have positive real part");
}

}  // namespace

SumTerm SumTerm::S(long s, const SurdGaussian& omega) {
  require_positive(omega);
  return SumTerm{Kind::S, s, omega};
}

SumTerm SumTerm::T(long s, const SurdGaussian& omega) {
  require_positive(omega);
  return SumTerm{Kind::T, s, omega};
}

SumTerm SumTerm::odd_apostol(long s) { return SumTerm{Kind::OddApostol, s, SurdGaussian(Rational(1, 2))}; }

bool operator<(const SumTerm& a, const SumTerm& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.s != b.s) return a.s < b.s;
  const int c = symbolic::compare_real_parts(a.omega, b.omega);
  if (c != 0) return c < 0;
  const auto& ga = a.omega.coefficient();
  const auto& gb = b.omega.coefficient();
  if (ga.im != gb.im) return ga.im < gb.im;
  if (a.omega.surd() != b.omega.surd()) return a.omega.surd() < b.omega.surd();
  return ga.re < gb.re;
}

std::string kind_name(SumTerm::Kind kind) {
  switch (kind) {
    case SumTerm::Kind::S: return "S";
    case SumTerm::Kind::T: return "T";
    case SumTerm::Kind::OddApostol: return "ODD_APOSTOL";
  }
  return "?";
}

Identity::Identity(std::string name, SymbolicValue constant, std::vector<LinearTerm> terms, bool require_canonical)
    : name_(std::move(name)), constant_(std::move(constant)) {
  symbolic::assert_real(constant_);
  if (require_canonical && !constant_.is_canonical()) {
    throw DomainError("identity constant has a negative pi power or a pi-multiplied atom: " +
                      symbolic::render_ascii(constant_));
  }
  std::sort(terms.begin(), terms.end(), [](const LinearTerm& a, const LinearTerm& b) { return a.term < b.term; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().term == t.term) terms_.back().coeff += t.coeff;
    else terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const LinearTerm& t) { return t.coeff.is_zero(); });
}

Rational Identity::coefficient(const SumTerm& term) const {
  for (const auto& t : terms_) {
    if (t.term == term) return t.coeff;
  }
  return Rational(0);
}

Identity Identity::renamed(std::string name) const {
  Identity out = *this;
  out.name_ = std::move(name);
  return out;
}

Identity Identity::scaled(const Rational& factor) const {
  std::vector<LinearTerm> terms;
  for (const auto& t : terms_) terms.push_back({t.coeff * factor, t.term});
  return Identity(name_, constant_.scaled(SurdGaussian(factor)), std::move(terms), false);
}

Identity operator+(const Identity& a, const Identity& b) {
  std::vector<LinearTerm> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Identity(a.name_, a.constant_ + b.constant_, std::move(terms), false);
}

Identity operator-(const Identity& a, const Identity& b) { return a + b.scaled(Rational(-1)); }

bool operator==(const Identity& a, const Identity& b) {
  if (a.constant_ != b.constant_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].term == b.terms_[i].term)) return false;
  }
  return a.name_ == b.name_;
}

Identity eliminate_term(const Identity& a, const Identity& b, const SumTerm& term) {
  const Rational ca = a.coefficient(term);
  const Rational cb = b.coefficient(term);
  if (ca.is_zero()) return a;
  if (cb.is_zero()) throw DomainError("eliminate_term: term absent from the second relation");
  return a - b.scaled(ca / cb);
}

namespace {

// Leading real coefficient of the constant, ignoring surd keys.
std::optional<Rational> leading_constant(const SymbolicValue& v) {
  for (const auto& t : v.terms()) {
    const auto& g = t.coefficient.coefficient();
    if (!g.re.is_zero()) return g.re;
  }
  return std::nullopt;
}

}  // namespace

Identity normalize_integer(const Identity& id) {
  if (id.terms().empty()) return id;
  exact::Integer lcm_den(1);
  exact::Integer gcd_num(0);
  for (const auto& t : id.terms()) {
    lcm_den = lcm(lcm_den, t.coeff.denominator());
    gcd_num = gcd(gcd_num, t.coeff.numerator());
  }
  Rational factor(lcm_den, abs(gcd_num));
  Identity out = id.scaled(factor);
  const auto lead = leading_constant(out.constant());
  const bool flip = lead ? lead->sign() < 0 : out.terms().front().coeff.sign() < 0;
  return flip ? out.scaled(Rational(-1)) : out;
}

Identity normalize_atom(const Identity& id, const BasisAtom& atom) {
  const auto c = id.constant().coefficient(atom);
  if (c.is_zero() || !c.is_real()) throw DomainError("normalize_atom: atom " + atom.tag() + " not present");
  return id.scaled(c.re.inverse());
}

Identity eliminate_atom(const Identity& a, const Identity& b, const BasisAtom& atom) {
  const auto ca = a.constant().coefficient(atom);
  const auto cb = b.constant().coefficient(atom);
  if (ca.is_zero() || cb.is_zero()) throw DomainError("eliminate_atom: " + atom.tag() + " is absent from an input");
  if (!ca.is_real() || !cb.is_real()) throw DomainError("eliminate_atom: non-real coefficient on " + atom.tag());
  const Identity combined = a.scaled(cb.re) - b.scaled(ca.re);
  if (combined.is_trivial()) throw DegenerateResultError("eliminate_atom: the relations are proportional");
  const Identity out(a.name() + " - " + b.name() + " [" + atom.tag() + "]", combined.constant(), combined.terms());
  return normalize_integer(out);
}

}  // namespace zforge::identities
