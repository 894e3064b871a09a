#include "zforge/symbolic/argument.hpp"

#include <cctype>

#include "zforge/errors.hpp"

namespace zforge::symbolic {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string text) : text_(std::move(text)) {}

  bool done() const { return pos_ >= text_.size(); }
  bool accept(std::string_view token) {
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  bool at_digit() const { return !done() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  std::string digits() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  // [sign] digits ["/" digits]
  std::string rational_text() {
    std::string out;
    if (accept("-")) out = "-";
    else accept("+");
    out += digits();
    if (!done() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      out += "/" + digits();
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("argument '" + text_ + "': " + why + " at position " + std::to_string(pos_));
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

SurdGaussian parse_argument(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  Cursor cur(compact);

  Rational coef(1);
  if (cur.at_digit() || compact.rfind('-', 0) == 0 || compact.rfind('+', 0) == 0) {
    std::string sign;
    if (cur.accept("-")) sign = "-";
    else cur.accept("+");
    if (cur.at_digit()) coef = Rational::parse(sign + cur.digits());
    else if (!sign.empty()) coef = Rational(-1);
    cur.accept("*");
  }
  cur.expect("pi");

  std::int64_t radicand = 1;
  if (cur.accept("*sqrt(")) {
    radicand = std::stoll(cur.digits());
    if (radicand < 1) cur.fail("sqrt radicand must be positive");
    cur.expect(")");
  }
  Rational q(1);
  if (cur.accept("/")) {
    q = Rational::parse(cur.digits());
    if (q.is_zero()) cur.fail("zero denominator");
  }
  GaussianRational gauss(1);
  if (cur.accept("*(")) {
    const Rational a = Rational::parse(cur.rational_text());
    Rational b;
    if (cur.accept("+")) b = Rational(1);
    else if (cur.accept("-")) b = Rational(-1);
    else cur.fail("expected '+' or '-'");
    if (cur.at_digit()) b *= Rational::parse(cur.rational_text());
    cur.expect("i)");
    gauss = GaussianRational(a, b);
  }
  if (!cur.done()) cur.fail("trailing characters");

  // x = coef/q * pi * sqrt(d) * (a + bi);  omega = x / (2 pi)
  const GaussianRational g = gauss * GaussianRational(coef / (q * Rational(2)));
  if (g.is_zero()) throw ParseError("argument must be nonzero");
  return SurdGaussian(g, radicand);
}

std::string format_argument(const SurdGaussian& omega) {
  const GaussianRational two_g = omega.coefficient() * GaussianRational(2);
  const std::string sqrt_part = omega.surd() == 1 ? "" : "*sqrt(" + std::to_string(omega.surd()) + ")";
  if (two_g.is_real()) {
    const Rational& r = two_g.re;
    std::string out;
    if (r.numerator() == -1) out = "-";
    else if (r.numerator() != 1) out = r.numerator().get_str() + "*";
    out += "pi" + sqrt_part;
    if (r.denominator() != 1) out += "/" + r.denominator().get_str();
    return out;
  }
  std::string imag;
  if (two_g.im == Rational(1)) imag = "+i";
  else if (two_g.im == Rational(-1)) imag = "-i";
  else imag = (two_g.im.sign() > 0 ? "+" : "") + two_g.im.to_string() + "i";
  return "pi" + sqrt_part + "*(" + two_g.re.to_string() + imag + ")";
}

}  // namespace zforge::symbolic
