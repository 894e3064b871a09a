#include "zforge/identities/serialize.hpp"

#include <optional>

#include <json.hpp>

#include "zforge/errors.hpp"
#include "zforge/symbolic/argument.hpp"

namespace zforge::identities {

using json = nlohmann::json;
using symbolic::GaussianRational;

std::string term_text(const SumTerm& term) {
  const std::string s = "[" + std::to_string(term.s) + "]";
  if (term.kind == SumTerm::Kind::OddApostol) return "ODD_APOSTOL" + s + "(pi)";
  return kind_name(term.kind) + s + "(" + symbolic::format_argument(term.omega) + ")";
}

namespace {

// Appends "c*term" with the sign handled by the joiner.
void append_term(std::string& out, const Rational& coeff, const std::string& body) {
  const bool negative = coeff.sign() < 0;
  const Rational mag = coeff.abs();
  std::string text;
  if (mag != Rational(1)) text = (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")") + "*";
  text += body;
  if (out.empty()) out = negative ? "-" + text : text;
  else out += (negative ? " - " : " + ") + text;
}

std::string sums_text(const std::vector<LinearTerm>& terms, const Rational& factor) {
  std::string out;
  for (const auto& t : terms) append_term(out, t.coeff * factor, term_text(t.term));
  return out;
}

std::optional<BasisAtom> subject_atom(const SymbolicValue& constant) {
  std::optional<BasisAtom> best;
  for (const auto& t : constant.terms()) {
    if (t.atom.base() == BasisAtom::Base::Zeta && t.atom.pi_power() == 0 && t.coefficient.is_rational()) {
      if (!best || t.atom.zeta_index() > best->zeta_index()) best = t.atom;
    }
  }
  if (best) return best;
  const auto terms = constant.terms();
  if (terms.size() == 1 && terms.front().atom.is_pi_pow() && terms.front().coefficient.is_rational()) {
    return terms.front().atom;
  }
  return std::nullopt;
}

std::string emit_text(const Identity& id) {
  const SymbolicValue& constant = id.constant();
  if (const auto atom = subject_atom(constant)) {
    const Rational c = constant.coefficient(*atom).re;
    SymbolicValue rest = constant;
    rest.add(*atom, SurdGaussian(-c));
    const Rational factor = Rational(-1) / c;
    std::string rhs = rest.is_zero() ? "" : symbolic::render_ascii(rest.scaled(SurdGaussian(factor)));
    const std::string sums = sums_text(id.terms(), factor);
    if (!sums.empty()) {
      if (rhs.empty()) rhs = sums;
      else rhs += sums[0] == '-' ? " - " + sums.substr(1) : " + " + sums;
    }
    const std::string lhs = symbolic::render_ascii(SymbolicValue(*atom, SurdGaussian(1)));
    return lhs + " = " + (rhs.empty() ? "0" : rhs);
  }
  const std::string sums = sums_text(id.terms(), Rational(1));
  return (sums.empty() ? "0" : sums) + " = " + symbolic::render_ascii(-constant);
}

std::string emit_json(const Identity& id) {
  json terms = json::array();
  for (const auto& t : id.terms()) {
    json entry = {{"coeff", t.coeff.to_string()}, {"kind", kind_name(t.term.kind)}, {"s", t.term.s}};
    if (t.term.kind != SumTerm::Kind::OddApostol) {
      const auto& g = t.term.omega.coefficient();
      entry["omega"] = {{"re", g.re.to_string()}, {"im", g.im.to_string()}, {"surd", t.term.omega.surd()}};
    }
    terms.push_back(std::move(entry));
  }
  json out = {{"name", id.name()},
              {"constant", json::parse(symbolic::render(id.constant(), symbolic::RenderFormat::Json))},
              {"terms", std::move(terms)}};
  return out.dump();
}

}  // namespace

std::string emit(const Identity& id, Format format) { return format == Format::Json ? emit_json(id) : emit_text(id); }

Identity parse_identity_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    SymbolicValue constant;
    for (const auto& c : doc.at("constant")) {
      const GaussianRational g(Rational::parse(c.at("re").get<std::string>()),
                               Rational::parse(c.at("im").get<std::string>()));
      constant.add(BasisAtom::from_tag(c.at("atom").get<std::string>()), SurdGaussian(g, c.at("surd").get<std::int64_t>()));
    }
    std::vector<LinearTerm> terms;
    for (const auto& t : doc.at("terms")) {
      const Rational coeff = Rational::parse(t.at("coeff").get<std::string>());
      const std::string kind = t.at("kind").get<std::string>();
      const long s = t.at("s").get<long>();
      if (kind == "ODD_APOSTOL") {
        terms.push_back({coeff, SumTerm::odd_apostol(s)});
        continue;
      }
      const json& w = t.at("omega");
      const SurdGaussian omega(GaussianRational(Rational::parse(w.at("re").get<std::string>()),
                                                Rational::parse(w.at("im").get<std::string>())),
                               w.at("surd").get<std::int64_t>());
      if (kind == "S") terms.push_back({coeff, SumTerm::S(s, omega)});
      else if (kind == "T") terms.push_back({coeff, SumTerm::T(s, omega)});
      else throw ParseError("unknown term kind '" + kind + "'");
    }
    return Identity(doc.at("name").get<std::string>(), constant, std::move(terms));
  } catch (const json::exception& e) {
    throw ParseError(std::string("identity JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("identity JSON: ") + e.what());
  }
}

}  // namespace zforge::identities
