#include "zforge/identities/classical.hpp"

#include <cctype>
#include <cmath>
#include <functional>

#include "zforge/errors.hpp"
#include "zforge/exact/bernoulli.hpp"
#include "zforge/numeric/series.hpp"
#include "zforge/numeric/special.hpp"
#include "zforge/numeric/sums.hpp"

namespace zforge::identities {

using numeric::Complex;
using numeric::PrecisionContext;
using numeric::Real;

Real Scale::value(mpfr_prec_t bits) const {
  Real v = Real::from_rational(coeff, bits);
  if (pi_power == 1) v *= Real::pi(bits);
  return v;
}

std::string Scale::to_string() const {
  if (pi_power == 0) return coeff.to_string();
  std::string out;
  if (coeff.numerator() != 1) out = coeff.numerator().get_str();
  out += "pi";
  if (coeff.denominator() != 1) out += "/" + coeff.denominator().get_str();
  return out;
}

Scale parse_scale(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') text += c;
  }
  const auto fail = [&] { throw ParseError("scale '" + raw + "': expected forms like pi, 2pi, pi/2, 3/2"); };
  Scale out;
  const auto at = text.find("pi");
  if (at == std::string::npos) {
    out.pi_power = 0;
    out.coeff = Rational::parse(text);
  } else {
    const std::string head = text.substr(0, at);
    const std::string tail = text.substr(at + 2);
    Rational num = head.empty() ? Rational(1) : Rational::parse(head);
    if (!tail.empty()) {
      if (tail[0] != '/') fail();
      num /= Rational::parse(tail.substr(1));
    }
    out.coeff = num;
  }
  if (out.coeff.sign() <= 0) throw ParseError("scale '" + raw + "' must be positive");
  return out;
}

namespace {

constexpr long kMaxTerms = 10'000'000;

struct Check {
  mpfr_prec_t bits;
  Complex residual;
  double log10_scale = 0.0;

  void add(const Real& piece) {
    residual += Complex(piece);
    log10_scale = std::max(log10_scale, piece.log10_abs());
  }
  void add(const Complex& piece) {
    residual += piece;
    log10_scale = std::max(log10_scale, numeric::abs(piece).log10_abs());
  }
  VerifyResult finish(std::string name, const PrecisionContext& ctx) const {
    VerifyResult out{std::move(name), Complex(residual.re().with_precision(ctx.bits()),
                                              residual.im().with_precision(ctx.bits()))};
    out.log10_scale = log10_scale;
    out.log10_tolerance = log10_scale - ctx.verify_digits();
    out.pass = out.log10_residual() <= out.log10_tolerance;
    return out;
  }
};

Real rational(const Rational& r, mpfr_prec_t bits) { return Real::from_rational(r, bits); }

// sum_{n>=1} term(n), where |term(n)| <= C n^-s e^(-rate n) with log C = log_c.
Real real_series(const std::function<Real(long)>& term, long s, double rate, double log_c, const PrecisionContext& ctx,
                 mpfr_prec_t bits) {
  if (!(rate > 0.0)) throw DomainError("series does not converge");
  const double log10e = std::log10(std::exp(1.0));
  auto wrapped = [&](long n) { return Complex(term(n)); };
  auto tail = [&](long n) { return (log_c + numeric::log_power_geometric_tail(s, -rate, n)) * log10e; };
  return numeric::sum_until_bound(wrapped, tail, ctx.truncation_digits(), 1, 1, kMaxTerms, bits).value.re();
}

Real S_real(long s, const Real& x, const PrecisionContext& ctx) { return numeric::sum_S(s, Complex(x), ctx).re(); }

VerifyResult letter(const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 32;
  Check c{bits, Complex(bits)};
  c.add(S_real(-13, Real::pi(bits) * 2L, ctx));
  c.add(-rational(Rational(1, 24), bits));
  return c.finish("letter", ctx);
}

VerifyResult glaisher(long k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("glaisher requires k >= 1");
  const mpfr_prec_t bits = ctx.bits() + 32;
  Check c{bits, Complex(bits)};
  c.add(S_real(-(4 * k + 1), Real::pi(bits) * 2L, ctx));
  c.add(-rational(exact::bernoulli(4 * k + 2) / Rational(4 * (2 * k + 1)), bits));
  return c.finish("glaisher(k=" + std::to_string(k) + ")", ctx);
}

VerifyResult apostol(long k, const PrecisionContext& ctx) {
  if (k < 0) throw DomainError("apostol requires k >= 0");
  const mpfr_prec_t bits = ctx.bits() + 32;
  Check c{bits, Complex(bits)};
  c.add(numeric::odd_apostol_sum(k, ctx));
  const Rational rhs = (Rational(2).pow(4 * k + 1) - Rational(1)) * exact::bernoulli(4 * k + 2) / Rational(8 * k + 4);
  c.add(-rational(rhs, bits));
  return c.finish("apostol(k=" + std::to_string(k) + ")", ctx);
}

VerifyResult entry13(long k, const Scale& alpha, const PrecisionContext& ctx) {
  if (k < 2) throw DomainError("entry13 requires k >= 2");
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Real pi = Real::pi(bits);
  const Real a = alpha.value(bits);
  const Real b = pi * pi / a;
  const Real ak = numeric::pow(a, k);
  const Real mbk = numeric::pow(-b, k);
  Check c{bits, Complex(bits)};
  c.add(ak * S_real(1 - 2 * k, a * 2L, ctx));
  c.add(-(mbk * S_real(1 - 2 * k, b * 2L, ctx)));
  c.add(-((ak - mbk) * rational(exact::bernoulli(2 * k) / Rational(4 * k), bits)));
  return c.finish("entry13(k=" + std::to_string(k) + ",alpha=" + alpha.to_string() + ")", ctx);
}

VerifyResult entry21(long n, const Scale& alpha, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("entry21 requires n >= 1");
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Real pi = Real::pi(bits);
  const Real a = alpha.value(bits);
  const Real b = pi * pi / a;
  const Real half_zeta = numeric::zeta_real(2 * n + 1, ctx.widened(10)).with_precision(bits) / 2L;
  Check c{bits, Complex(bits)};
  c.add(numeric::pow(a, -n) * half_zeta);
  c.add(numeric::pow(a, -n) * S_real(2 * n + 1, a * 2L, ctx));
  c.add(-(numeric::pow(-b, -n) * half_zeta));
  c.add(-(numeric::pow(-b, -n) * S_real(2 * n + 1, b * 2L, ctx)));
  Real poly(bits);
  for (long j = 0; j <= n + 1; ++j) {
    const Rational coeff = exact::bernoulli_over_factorial(2 * j) * exact::bernoulli_over_factorial(2 * n + 2 - 2 * j);
    Real t = rational(coeff, bits) * numeric::pow(a, n + 1 - j) * numeric::pow(b, j);
    poly += j % 2 == 0 ? t : -t;
  }
  c.add(poly * rational(Rational(2).pow(2 * n), bits));
  return c.finish("entry21(n=" + std::to_string(n) + ",alpha=" + alpha.to_string() + ")", ctx);
}

VerifyResult entry8(const Scale& alpha, long k, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Real pi = Real::pi(bits);
  const Real a = alpha.value(bits);
  if (k < 1 || !(Real::from_long(k, bits) < a)) throw DomainError("entry8 requires an integer 1 <= k < alpha");
  const Real b = pi / a;
  const Real two_a2 = a * a * 2L;
  const Real two_b2 = b * b * 2L;
  const Real one = Real::from_long(1, bits);
  // sinh(2ank) / (e^(2a^2 n) - 1) <= e^(-2a(a-k)n) / (1 - e^(-2a^2))
  const double ad = a.to_double();
  const double bd = b.to_double();
  const double rate_a = 2.0 * ad * (ad - static_cast<double>(k));
  const double rate_b = 2.0 * bd * bd;
  const Real first = real_series(
      [&](long n) { return numeric::sinh(a * (2L * n * k)) / (numeric::exp(two_a2 * n) - one); }, 0, rate_a,
      -std::log1p(-std::exp(-2.0 * ad * ad)), ctx, bits);
  const Real second = real_series(
      [&](long n) { return numeric::sin(b * (2L * n * k)) / (numeric::exp(two_b2 * n) - one); }, 0, rate_b,
      -std::log1p(-std::exp(-rate_b)), ctx, bits);
  const Real ak = a * k;
  const Real bk = b * k;
  Check c{bits, Complex(bits)};
  c.add(a * first);
  c.add(b * second);
  c.add(-(a / 4L * numeric::cosh(ak) / numeric::sinh(ak)));
  c.add(b / 4L * numeric::cos(bk) / numeric::sin(bk));
  c.add(Real::from_rational(Rational(k, 2), bits));
  return c.finish("entry8(alpha=" + alpha.to_string() + ",k=" + std::to_string(k) + ")", ctx);
}

std::vector<VerifyResult> zucker(const Scale& xs, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits() + 32;
  const Real pi = Real::pi(bits);
  const Real x = xs.value(bits);
  const Real one = Real::from_long(1, bits);
  const double rate = 2.0 * M_PI * x.to_double();
  // 1/(e^y - 1) <= e^-y / (1 - e^-y1) and the same bound for 1 - tanh, coth - 1 up to a factor 2.
  const double log_c = std::log(2.0) - std::log1p(-std::exp(-rate));

  auto sign = [](long n) { return n % 2 == 0 ? 1L : -1L; };
  auto exp_term = [&](long n, bool minus) {
    const Real e = numeric::exp(pi * x * (2L * n));
    return one / ((minus ? e - one : e + one) * n);
  };
  auto coth_m1 = [&](long m) {
    const Real y = pi * x * m;
    return (numeric::cosh(y) / numeric::sinh(y) - one) / (2L * m);
  };
  auto one_m_tanh = [&](long m) {
    const Real y = pi * x * m;
    return (one - numeric::sinh(y) / numeric::cosh(y)) / (2L * m);
  };

  std::vector<VerifyResult> out;
  const std::string base = "zucker(x=" + xs.to_string() + ")#";
  for (int display = 1; display <= 4; ++display) {
    const bool alternating = display % 2 == 0;
    const bool minus = display <= 2;
    const Real lhs = real_series(
        [&](long n) {
          const Real t = exp_term(n, minus);
          return alternating ? t * sign(n) : t;
        },
        1, rate, log_c, ctx, bits);
    const Real rhs = real_series(
        [&](long m) {
          const Real t = minus ? coth_m1(m) : one_m_tanh(m);
          return alternating ? t * sign(m) : t;
        },
        1, rate, log_c, ctx, bits);
    Check c{bits, Complex(bits)};
    c.add(lhs);
    c.add(-rhs);
    out.push_back(c.finish(base + std::to_string(display), ctx));
  }
  return out;
}

}  // namespace

std::vector<VerifyResult> verify_classical(Classical which, const ClassicalParams& params, const PrecisionContext& ctx) {
  switch (which) {
    case Classical::Letter: return {letter(ctx)};
    case Classical::Glaisher: return {glaisher(params.k, ctx)};
    case Classical::Apostol: return {apostol(params.k, ctx)};
    case Classical::Entry13: return {entry13(params.k, params.alpha, ctx)};
    case Classical::Entry21: return {entry21(params.n, params.alpha, ctx)};
    case Classical::Entry8: return {entry8(params.alpha, params.k, ctx)};
    case Classical::Zucker: return zucker(params.alpha, ctx);
  }
  throw DomainError("unknown classical check");
}

Classical classical_from_name(const std::string& name) {
  for (Classical c : {Classical::Letter, Classical::Glaisher, Classical::Apostol, Classical::Entry13,
                      Classical::Entry21, Classical::Entry8, Classical::Zucker}) {
    if (classical_name(c) == name) return c;
  }
  throw ParseError("unknown classical check '" + name + "'");
}

std::string classical_name(Classical which) {
  switch (which) {
    case Classical::Letter: return "letter";
    case Classical::Glaisher: return "glaisher";
    case Classical::Apostol: return "apostol";
    case Classical::Entry13: return "entry13";
    case Classical::Entry21: return "entry21";
    case Classical::Entry8: return "entry8";
    case Classical::Zucker: return "zucker";
  }
  return "?";
}

}  // namespace zforge::identities
