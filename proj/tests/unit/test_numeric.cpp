#include "doctest.h"

#include <random>

#include "numeric_helpers.hpp"
#include "zforge/errors.hpp"
#include "zforge/exact/bernoulli.hpp"
#include "zforge/exact/zeta_special.hpp"
#include "zforge/numeric/evaluate.hpp"
#include "zforge/numeric/mellin.hpp"
#include "zforge/numeric/special.hpp"
#include "zforge/numeric/sums.hpp"
#include "zforge/symbolic/contour.hpp"

using namespace zforge;
using namespace zforge::numeric;
using namespace testing_support;
using symbolic::BasisAtom;
using symbolic::SymbolicValue;

namespace {

// Independent reference values, computed with mpmath at 60 digits.
const char* kS3TwoPi = "0.00187137275936602737883704554902435577188746483307209760111913";
const char* kS5Pi = "0.045224507710673430560851149551705557145331632195014720192106";
const char* kT5TwoPi = "0.00186407089550554563833876026769835171797664161364605452156838";
const char* kZeta3 = "1.20205690315959428539973816151144999076498629234049888179227";
const char* kLi3InvE = "0.386995424210199750135041296886740671482361508184258527807312";

Complex two_pi(const PrecisionContext& ctx) { return Complex(Real::pi(ctx.bits()) * 2L); }

}  // namespace

TEST_CASE("real and complex basics") {
  const PrecisionContext ctx(30);
  const Real a = Real::parse("1.5", ctx.bits());
  CHECK((a * a).to_string(5) == "2.2500e0");
  CHECK(Real::pi(ctx.bits()).to_string(10) == "3.141592654e0");
  CHECK(Real::from_long(-25, 64).to_string(3) == "-2.50e1");
  CHECK_THROWS_AS(Real::parse("1.2.3", 64), ParseError);
  CHECK_THROWS_AS(a / Real(64), PrecisionError);
  CHECK_THROWS_AS(log(Real(64)), DomainError);
  const Complex z = Complex::from_doubles(0.3, 0.4, ctx.bits());
  CHECK(log10_diff(exp(log(z)), z) < -35);
  CHECK(log10_diff(sin(z) * sin(z) + cos(z) * cos(z), Complex::from_long(1, ctx.bits())) < -35);
  CHECK(log10_diff(pow(z, 3L), z * z * z) < -35);
  CHECK(z.to_string(3) == "3.00e-1 + 4.00e-1i");
}

TEST_CASE("round half even rendering") {
  CHECK(Real(0.125, 64).to_string(2) == "1.2e-1");
  CHECK(Real(0.375, 64).to_string(2) == "3.8e-1");
}

TEST_CASE("precision context") {
  const PrecisionContext ctx(50);
  CHECK(ctx.guard() == 10);
  CHECK(ctx.bits() >= 60 * 3.32);
  CHECK(ctx.truncation_digits() == 55);
  CHECK_THROWS_AS(PrecisionContext(0), DomainError);
}

TEST_CASE("zeta") {
  const PrecisionContext ctx(50);
  CHECK(close_to(zeta_complex(Complex::from_long(3, ctx.bits()), ctx), kZeta3, "0", 50, ctx));
  CHECK(close_to(zeta_complex(Complex::from_doubles(2.5, 10, ctx.bits()), ctx),
                 "1.14050124365959180031734391833031580013101589163663706790058",
                 "-0.063204866322836859173694897523696531101936869755879840865702", 48, ctx));
  CHECK(close_to(zeta_complex(Complex::from_doubles(-2.5, 1, ctx.bits()), ctx),
                 "0.0235936105863796486042858617695163595051573157282437744084049",
                 "0.00140779960583837703875193335448526859147554137146939246879485", 48, ctx));
  CHECK_THROWS_AS(zeta_complex(Complex::from_long(1, ctx.bits()), ctx), PoleError);
  // even values agree with the exact table
  for (long n = 1; n <= 10; ++n) {
    const Real exact = Real::from_rational(exact::zeta_even_over_pi_power(n), ctx.bits()) *
                       pow(Real::pi(ctx.bits()), 2 * n);
    CHECK(log10_diff(zeta_complex(Complex::from_long(2 * n, ctx.bits()), ctx), Complex(exact)) < -50);
  }
  CHECK(log10_diff(zeta_complex(Complex::from_long(0, ctx.bits()), ctx), Complex(Real(-0.5, ctx.bits()))) < -50);
  // two precisions agree
  const PrecisionContext wide(80);
  CHECK(log10_diff(Complex(zeta_real(3, wide)), Complex(zeta_real(3, ctx))) < -50);
}

TEST_CASE("gamma") {
  const PrecisionContext ctx(40);
  CHECK(log10_diff(gamma_complex(Complex::from_long(5, ctx.bits()), ctx), Complex::from_long(24, ctx.bits())) < -40);
  const Complex half(Real(0.5, ctx.bits()));
  CHECK(log10_diff(gamma_complex(half, ctx), Complex(sqrt(Real::pi(ctx.bits())))) < -40);
  const Complex z = Complex::from_doubles(0.3, 0.4, ctx.bits());
  CHECK(close_to(gamma_complex(z, ctx), "0.911561527804585833116689451492372492608142561291870373664241",
                 "-1.36719335758541862306338626992189284697740705124748950221351", 40, ctx));
  const Complex pi(Real::pi(ctx.bits()));
  const Complex one = Complex::from_long(1, ctx.bits());
  const Complex reflection = gamma_complex(z, ctx) * gamma_complex(one - z, ctx) * sin(pi * z) / pi;
  CHECK(log10_diff(reflection, one) < -40);
  CHECK(close_to(gamma_complex(Complex::from_doubles(2, 40, ctx.bits()), ctx),
                 "-3.26346579808267247576360244723662438689769010205886710567737e-25",
                 "2.33566959708735467044438052341742317846773422675953928153127e-26", 63, ctx));
  CHECK_THROWS_AS(gamma_complex(Complex::from_long(0, ctx.bits()), ctx), PoleError);
  CHECK_THROWS_AS(gamma_complex(Complex::from_long(-3, ctx.bits()), ctx), PoleError);
  // recurrence Gamma(z+1) = z Gamma(z)
  for (double re : {-2.7, -0.4, 0.6, 3.3, 17.0}) {
    const Complex w = Complex::from_doubles(re, 1.25, ctx.bits());
    CHECK(log10_diff(gamma_complex(w + one, ctx), w * gamma_complex(w, ctx)) <
          abs(gamma_complex(w + one, ctx)).log10_abs() - 38);
  }
}

TEST_CASE("polylog") {
  const PrecisionContext ctx(50);
  const Complex inv_e = exp(Complex::from_long(-1, ctx.bits()));
  CHECK(close_to(polylog_series(3, inv_e, ctx), kLi3InvE, "0", 50, ctx));
  CHECK(polylog_series(4, Complex(ctx.bits()), ctx).is_zero());
  CHECK(log10_diff(polylog_series(2, Complex::from_long(1, ctx.bits()), ctx),
                   Complex(Real::pi(ctx.bits()) * Real::pi(ctx.bits()) / 6L)) < -50);
  CHECK(close_to(polylog_series(2, Complex::from_long(-1, ctx.bits()), ctx),
                 "-0.822467033424113218236207583323012594609474950603399218867779", "0", 50, ctx));
  CHECK(close_to(polylog_series(3, exp(Complex::i(ctx.bits())), ctx),
                 "0.448573007280017397750208247431776656565014473605029158402433",
                 "0.942869236784111460190087654159482801502990884696355315825155", 49, ctx));
  CHECK(close_to(polylog_series(3, Complex(Real::parse("0.9", ctx.bits())), ctx),
                 "1.04965895018643986964583249321010007043835542898355233615857", "0", 49, ctx));
  CHECK(close_to(polylog_series(-2, Complex(Real(0.5, ctx.bits())), ctx), "6", "0", 50, ctx));
  CHECK_THROWS_AS(polylog_series(2, Complex::from_long(2, ctx.bits()), ctx), DomainError);
  CHECK_THROWS_AS(polylog_series(1, Complex::from_long(-1, ctx.bits()), ctx), DomainError);
}

TEST_CASE("exponential sums match references") {
  const PrecisionContext ctx(50);
  CHECK(close_to(sum_S(3, two_pi(ctx), ctx), kS3TwoPi, "0", 52, ctx));
  CHECK(close_to(sum_S(5, Complex(Real::pi(ctx.bits())), ctx), kS5Pi, "0", 51, ctx));
  CHECK(close_to(sum_T(5, two_pi(ctx), ctx), kT5TwoPi, "0", 52, ctx));
  CHECK(close_to(sum_S(3, Complex::from_doubles(1.5, 2, ctx.bits()), ctx),
                 "-0.11916379388522629726145227764610282612602613394197428493026",
                 "-0.159725098043338392906901604580511333661979970355362687953183", 50, ctx));
  const PrecisionContext p30(30);
  const Complex letter = sum_S(-13, two_pi(p30), p30);
  CHECK(log10_diff(letter, Complex(Real::from_rational(exact::Rational(1, 24), p30.bits()))) < -31);
  CHECK_THROWS_AS(sum_S(3, Complex(ctx.bits()), ctx), DomainError);
  CHECK_THROWS_AS(sum_T(3, Complex::from_doubles(-1, 0, ctx.bits()), ctx), DomainError);
}

TEST_CASE("direct partial sum oracle") {
  // Plain double-precision partial sums with an explicit remainder estimate.
  const PrecisionContext ctx(12);
  double direct = 0.0;
  for (int n = 1; n < 40; ++n) direct += 1.0 / (std::pow(n, 3) * std::expm1(2 * M_PI * n));
  CHECK(std::fabs(sum_S(3, two_pi(ctx), ctx).re().to_double() - direct) < 1e-15);
  double t = 0.0;
  for (int n = 1; n < 40; ++n) t += 1.0 / (std::pow(n, 5) * (std::exp(2 * M_PI * n) + 1.0));
  CHECK(std::fabs(sum_T(5, two_pi(ctx), ctx).re().to_double() - t) < 1e-15);
}

TEST_CASE("truncation bound honesty") {
  const PrecisionContext ctx(40);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(0.3, 12.0);
  std::uniform_real_distribution<double> im(-5.0, 5.0);
  std::uniform_int_distribution<long> sdist(-6, 9);
  for (int trial = 0; trial < 30; ++trial) {
    const long s = sdist(rng);
    const Complex x = Complex::from_doubles(re(rng), im(rng), ctx.bits());
    for (int t = 0; t < 2; ++t) {
      const SeriesResult auto_n = t == 0 ? sum_S_detailed(s, x, ctx) : sum_T_detailed(s, x, ctx);
      const SeriesResult doubled =
          t == 0 ? sum_S_detailed(s, x, ctx, 2 * auto_n.last_index) : sum_T_detailed(s, x, ctx, 2 * auto_n.last_index);
      CAPTURE(s);
      CAPTURE(x.to_string(8));
      CHECK(log10_diff(auto_n.value, doubled.value) <= auto_n.log10_error_bound + 1e-9);
    }
  }
}

TEST_CASE("T as a rearrangement of S") {
  const PrecisionContext ctx(50);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(0.5, 10.0);
  std::uniform_real_distribution<double> im(-3.0, 3.0);
  for (long s = -5; s <= 9; ++s) {
    const Complex x = Complex::from_doubles(re(rng), im(rng), ctx.bits());
    const Complex rhs = sum_S(s, x, ctx) - sum_S(s, x * Real::from_long(2, ctx.bits()), ctx) * Real::from_long(2, ctx.bits());
    const double scale = std::max(0.0, abs(sum_S(s, x, ctx)).log10_abs());
    CHECK(log10_diff(sum_T(s, x, ctx), rhs) < scale - 48);
  }
}

TEST_CASE("periodicity in the imaginary direction") {
  const PrecisionContext ctx(50);
  const Complex shift(Real(ctx.bits()), Real::pi(ctx.bits()) * 2L);
  for (long s : {-3L, 1L, 3L, 5L}) {
    const Complex x = Complex::from_doubles(1.3, 0.7, ctx.bits());
    CHECK(log10_diff(sum_S(s, x + shift, ctx), sum_S(s, x, ctx)) < -48);
  }
}

TEST_CASE("apostol odd sums") {
  const PrecisionContext ctx(40);
  for (long k = 0; k <= 2; ++k) {
    const exact::Rational rhs =
        (exact::Rational(2).pow(4 * k + 1) - exact::Rational(1)) * exact::bernoulli(4 * k + 2) / exact::Rational(8 * k + 4);
    CHECK(log10_diff(odd_apostol_sum(k, ctx), Complex(Real::from_rational(rhs, ctx.bits()))) < -40);
  }
  CHECK(log10_diff(odd_apostol_sum(1, ctx), Complex(Real::from_rational(exact::Rational(31, 504), ctx.bits()))) < -40);
  CHECK_THROWS_AS(odd_apostol_sum(-1, ctx), DomainError);
}

TEST_CASE("numeric I") {
  const PrecisionContext ctx(50);
  const Complex i3 = numeric_I(3, two_pi(ctx), ctx);
  CHECK(log10_diff(i3, sum_S(3, two_pi(ctx), ctx) * Real::from_long(2, ctx.bits())) < -50);
  CHECK(abs(numeric_I(5, two_pi(ctx), ctx)).log10_abs() < -50);
  CHECK_THROWS_AS(numeric_I(3, Complex(ctx.bits()), ctx), DomainError);
  CHECK_THROWS_AS(numeric_I(4, two_pi(ctx), ctx), DomainError);
  // matches the exact closed form at symbolic arguments
  for (long k = 3; k <= 11; k += 2) {
    const auto exact_value = eval_symbolic(symbolic::eval_I_closed(static_cast<int>(k), symbolic::SurdGaussian(
                                                                                             symbolic::GaussianRational(1, 1))),
                                           ctx);
    const Complex x = two_pi(ctx) * Complex::from_doubles(1, 1, ctx.bits());
    CHECK(log10_diff(numeric_I(k, x, ctx), exact_value) < -48);
  }
}

TEST_CASE("functional equation") {
  const PrecisionContext ctx(40);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> re(0.5, 20.0);
  std::uniform_real_distribution<double> im(-5.0, 5.0);
  const Real four_pi2 = Real::pi(ctx.bits()) * Real::pi(ctx.bits()) * 4L;
  for (long k : {3L, 5L, 7L, 9L, 11L}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Complex x = Complex::from_doubles(re(rng), trial % 2 == 0 ? 0.0 : im(rng), ctx.bits());
      const Complex lhs = sum_S(k, x, ctx);
      const long sign = ((k - 1) / 2) % 2 == 0 ? 1 : -1;
      const Complex rhs = numeric_I(k, x, ctx) +
                          pow(x / (Real::pi(ctx.bits()) * 2L), k - 1) * sum_S(k, Complex(four_pi2) / x, ctx) *
                              Real::from_long(sign, ctx.bits());
      CHECK(log10_diff(lhs, rhs) < std::max(0.0, abs(lhs).log10_abs()) - 38);
    }
  }
}

TEST_CASE("alternating split") {
  // S(pi(1-i)) = 2^(1-k) T(2pi) + 2 S(2pi) - I(pi) for k = 1 mod 4; for
  // k = 3 mod 4 the same derivation leaves 2^(1-k) S(2pi) in place of T.
  const PrecisionContext ctx(40);
  const Real pi = Real::pi(ctx.bits());
  for (long k : {3L, 5L, 7L, 9L, 13L}) {
    const Complex lhs = sum_S(k, Complex(pi, -pi), ctx);
    const Complex first = k % 4 == 1 ? sum_T(k, two_pi(ctx), ctx) : sum_S(k, two_pi(ctx), ctx);
    const Complex rhs = first * pow(Real::from_long(2, ctx.bits()), 1 - k) +
                        sum_S(k, two_pi(ctx), ctx) * Real::from_long(2, ctx.bits()) - numeric_I(k, Complex(pi), ctx);
    CAPTURE(k);
    CHECK(log10_diff(lhs, rhs) < -38);
    CHECK(abs(lhs).log10_abs() > -10);
    CHECK(lhs.im().log10_abs() < -38);
  }
}

TEST_CASE("evaluate symbolic") {
  const PrecisionContext ctx(40);
  const auto v = symbolic::eval_I_closed(3, symbolic::SurdGaussian(1));
  CHECK(log10_diff(eval_symbolic(v, ctx), sum_S(3, two_pi(ctx), ctx) * Real::from_long(2, ctx.bits())) < -40);
  CHECK(eval_symbolic(SymbolicValue(), ctx).is_zero());
  SymbolicValue l(BasisAtom::pi_pow(1), exact::Rational(1, 6));
  l.add(BasisAtom::log2(), exact::Rational(-3, 4));
  CHECK(std::fabs(eval_symbolic(l, ctx).re().to_double() - 0.003738390178339891) < 1e-15);
  const SymbolicValue surd(BasisAtom::one(), symbolic::SurdGaussian::sqrt(2));
  CHECK(log10_diff(eval_symbolic(surd, ctx), Complex(sqrt(Real::from_long(2, ctx.bits())))) < -40);
}

TEST_CASE("mellin barnes") {
  const PrecisionContext ctx(30);
  const Real c = Real::from_long(2, ctx.bits());
  const Real H = Real::from_long(40, ctx.bits());
  for (const auto& [s, u] : std::vector<std::pair<long, double>>{{3, 1.0}, {2, 0.5}, {3, 10.0}}) {
    const Real uu(u, ctx.bits());
    const MellinResult r = mellin_barnes_check(s, uu, c, H, ctx);
    const Complex series = polylog_series(s, exp(Complex(-uu)), ctx);
    CHECK(log10_diff(Complex(r.value), series) < -18);
    CHECK(r.log10_tail_bound < -20);
  }
  CHECK_THROWS_AS(mellin_barnes_check(3, Real::from_long(1, 64), c, Real::from_long(5, 64), ctx), PrecisionError);
  CHECK_THROWS_AS(mellin_barnes_check(1, Real::from_long(1, 64), c, H, ctx), DomainError);
  CHECK_THROWS_AS(mellin_barnes_check(3, Real::from_long(1, 64), Real::from_long(1, 64), H, ctx), DomainError);
}
