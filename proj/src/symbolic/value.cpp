#include "zforge/symbolic/value.hpp"

#include <sstream>

#include <json.hpp>

#include "zforge/errors.hpp"
#include "zforge/exact/zeta_special.hpp"

namespace zforge::symbolic {

BasisAtom BasisAtom::zeta(int k) {
  if (k < 2) throw DomainError("zeta atom requires index >= 2");
  return BasisAtom(0, Base::Zeta, k);
}

std::strong_ordering operator<=>(const BasisAtom& a, const BasisAtom& b) {
  auto rank = [](BasisAtom::Base base) {
    switch (base) {
      case BasisAtom::Base::One: return 0;
      case BasisAtom::Base::Zeta: return 1;
      case BasisAtom::Base::Log2: return 2;
    }
    return 3;
  };
  if (auto c = rank(a.base_) <=> rank(b.base_); c != 0) return c;
  if (auto c = a.zeta_index_ <=> b.zeta_index_; c != 0) return c;
  if (a.base_ == BasisAtom::Base::One) {
    if (auto c = (a.pi_power_ != 0) <=> (b.pi_power_ != 0); c != 0) return c;
  }
  return a.pi_power_ <=> b.pi_power_;
}

std::string BasisAtom::display() const {
  std::string pi = pi_power_ == 0 ? "" : "π^" + std::to_string(pi_power_);
  switch (base_) {
    case Base::One: return pi.empty() ? "1" : pi;
    case Base::Zeta: return (pi.empty() ? "" : pi + "·") + "ζ(" + std::to_string(zeta_index_) + ")";
    case Base::Log2: return (pi.empty() ? "" : pi + "·") + "log2";
  }
  return "?";
}

std::string BasisAtom::tag() const {
  std::string pi = pi_power_ == 0 ? "" : "pi^" + std::to_string(pi_power_);
  switch (base_) {
    case Base::One: return pi.empty() ? "one" : pi;
    case Base::Zeta: return (pi.empty() ? "" : pi + "*") + "zeta(" + std::to_string(zeta_index_) + ")";
    case Base::Log2: return (pi.empty() ? "" : pi + "*") + "log2";
  }
  return "?";
}

BasisAtom BasisAtom::from_tag(const std::string& tag) {
  auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw ParseError("malformed atom '" + tag + "'");
    }
    if (used != s.size()) throw ParseError("malformed atom '" + tag + "'");
    return v;
  };
  if (tag == "one") return one();
  if (tag == "log2") return log2();
  std::string rest = tag;
  int pi_power = 0;
  if (rest.rfind("pi^", 0) == 0) {
    const auto star = rest.find('*');
    pi_power = parse_int(rest.substr(3, star == std::string::npos ? std::string::npos : star - 3));
    if (star == std::string::npos) {
      if (pi_power == 0) throw ParseError("atom pi^0 must be written 'one'");
      return pi_pow(pi_power);
    }
    rest = rest.substr(star + 1);
  }
  if (rest == "log2") return log2().times_pi(pi_power);
  if (rest.rfind("zeta(", 0) == 0 && rest.back() == ')') {
    return zeta(parse_int(rest.substr(5, rest.size() - 6))).times_pi(pi_power);
  }
  throw ParseError("unknown atom '" + tag + "'");
}

void SymbolicValue::add(const BasisAtom& atom, const SurdGaussian& coefficient) {
  if (coefficient.is_zero()) return;
  if (atom.base() == BasisAtom::Base::Zeta && atom.zeta_index() % 2 == 0) {
    const long n = atom.zeta_index() / 2;
    add(BasisAtom::pi_pow(atom.pi_power() + atom.zeta_index()),
        coefficient * SurdGaussian(exact::zeta_even_over_pi_power(n)));
    return;
  }
  const Key key{atom, coefficient.surd()};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coefficient.coefficient());
    return;
  }
  it->second += coefficient.coefficient();
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<SymbolicValue::Term> SymbolicValue::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, g] : terms_) out.push_back({key.atom, SurdGaussian(g, key.surd)});
  return out;
}

GaussianRational SymbolicValue::coefficient(const BasisAtom& atom, std::int64_t surd) const {
  auto it = terms_.find(Key{atom, surd});
  return it == terms_.end() ? GaussianRational() : it->second;
}

bool SymbolicValue::contains(const BasisAtom& atom) const {
  for (const auto& [key, g] : terms_) {
    if (key.atom == atom) return true;
  }
  return false;
}

SymbolicValue SymbolicValue::operator-() const {
  SymbolicValue out;
  for (const auto& [key, g] : terms_) out.terms_.emplace(key, -g);
  return out;
}

SymbolicValue& SymbolicValue::operator+=(const SymbolicValue& o) {
  for (const auto& [key, g] : o.terms_) add(key.atom, SurdGaussian(g, key.surd));
  return *this;
}

SymbolicValue& SymbolicValue::operator-=(const SymbolicValue& o) {
  for (const auto& [key, g] : o.terms_) add(key.atom, SurdGaussian(-g, key.surd));
  return *this;
}

SymbolicValue SymbolicValue::scaled(const SurdGaussian& factor) const {
  SymbolicValue out;
  if (factor.is_zero()) return out;
  for (const auto& [key, g] : terms_) out.add(key.atom, SurdGaussian(g, key.surd) * factor);
  return out;
}

SymbolicValue SymbolicValue::times_pi(int n) const {
  SymbolicValue out;
  for (const auto& [key, g] : terms_) out.add(key.atom.times_pi(n), SurdGaussian(g, key.surd));
  return out;
}

SymbolicValue SymbolicValue::conj() const {
  SymbolicValue out;
  for (const auto& [key, g] : terms_) out.terms_.emplace(key, g.conj());
  return out;
}

bool SymbolicValue::is_real() const {
  for (const auto& [key, g] : terms_) {
    if (!g.is_real()) return false;
  }
  return true;
}

bool SymbolicValue::is_canonical() const {
  for (const auto& [key, g] : terms_) {
    if (!key.atom.is_canonical() || key.atom.pi_power() < 0) return false;
  }
  return true;
}

const SymbolicValue& assert_real(const SymbolicValue& v) {
  for (const auto& [key, g] : v.raw()) {
    if (!g.is_real()) {
      throw ImaginaryResidueError("imaginary residue on atom " + key.atom.tag() + " (coefficient " +
                                  g.to_string() + ")");
    }
  }
  return v;
}

namespace {

struct Style {
  const char* times;
  const char* minus;
  bool ascii;
};

std::string sqrt_text(std::int64_t d, const Style& st) {
  return st.ascii ? "sqrt(" + std::to_string(d) + ")" : "√" + std::to_string(d);
}

std::string atom_text(const BasisAtom& atom, const Style& st) {
  if (!st.ascii) return atom.display();
  if (atom.is_pi_pow() && atom.pi_power() == 1) return "pi";
  return atom.tag();
}

// Renders one term; `negative` receives the sign that the joiner prints.
std::string term_text(const BasisAtom& atom, const SurdGaussian& c, const Style& st, bool& negative) {
  const GaussianRational& g = c.coefficient();
  std::vector<std::string> factors;
  negative = false;
  if (g.is_real()) {
    negative = g.re.sign() < 0;
    const Rational mag = g.re.abs();
    const bool unit = mag == Rational(1);
    if (!unit || (atom.is_one() && c.surd() == 1)) {
      const bool bare = mag.is_integer() || (atom.is_one() && c.surd() == 1);
      factors.push_back(bare ? mag.to_string() : "(" + mag.to_string() + ")");
    }
  } else {
    factors.push_back("(" + g.to_string() + ")");
  }
  if (c.surd() != 1) factors.push_back(sqrt_text(c.surd(), st));
  if (!atom.is_one()) factors.push_back(atom_text(atom, st));
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += st.times;
    out += factors[i];
  }
  return out;
}

std::string render_linear(const SymbolicValue& v, const Style& st) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : v.terms()) {
    bool negative = false;
    const std::string text = term_text(term.atom, term.coefficient, st, negative);
    if (first) {
      out += negative ? std::string(st.minus) + text : text;
      first = false;
    } else {
      out += std::string(negative ? " " + std::string(st.minus) + " " : " + ") + text;
    }
  }
  return out;
}

}  // namespace

std::string render(const SymbolicValue& v, RenderFormat format) {
  if (format == RenderFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& term : v.terms()) {
      const auto& g = term.coefficient.coefficient();
      arr.push_back({{"atom", term.atom.tag()},
                     {"re", g.re.to_string()},
                     {"im", g.im.to_string()},
                     {"surd", term.coefficient.surd()}});
    }
    return arr.dump();
  }
  return render_linear(v, Style{"·", "−", false});
}

std::string render_ascii(const SymbolicValue& v) { return render_linear(v, Style{"*", "-", true}); }

}  // namespace zforge::symbolic
