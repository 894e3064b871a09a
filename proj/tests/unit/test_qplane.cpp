#include "doctest.h"

#include <random>

#include "numeric_helpers.hpp"
#include "zforge/errors.hpp"
#include "zforge/exact/arith.hpp"
#include "zforge/exact/zeta_special.hpp"
#include "zforge/numeric/evaluate.hpp"
#include "zforge/numeric/special.hpp"
#include "zforge/numeric/sums.hpp"
#include "zforge/qplane/modular.hpp"
#include "zforge/qplane/plot.hpp"
#include "zforge/qplane/qseries.hpp"
#include "zforge/symbolic/contour.hpp"

using namespace zforge;
using namespace zforge::qplane;
using exact::Rational;
using numeric::Complex;
using numeric::PrecisionContext;
using numeric::Real;
using symbolic::GaussianRational;
using symbolic::SurdGaussian;
using testing_support::close_to;
using testing_support::from_text;
using testing_support::log10_diff;

namespace {

Complex cplx(double re, double im, const PrecisionContext& ctx) { return Complex::from_doubles(re, im, ctx.bits()); }

Complex cplx_text(const char* re, const char* im, const PrecisionContext& ctx) { return from_text(re, im, ctx); }

}  // namespace

TEST_CASE("P_q against independent values") {
  const PrecisionContext ctx(40, 10);
  const Complex zero(ctx.bits());
  CHECK(log10_diff(P_q(3, zero, ctx), -Complex(numeric::zeta_real(3, ctx))) < -40);
  CHECK(close_to(P_q(3, cplx_text("0.1", "0", ctx), ctx), "-1.31446936224373609048964291459801071032530392", "0",
                 38, ctx));
  CHECK(close_to(P_q(-1, cplx_text("0.3", "0.2", ctx), ctx), "-0.185126256636500318312750197400734202604640681",
                 "-0.814638602686934470422406417452953176835343636", 38, ctx));
  CHECK(close_to(P_q(-5, cplx_text("0", "0.4", ctx), ctx), "-3.34223690382003749761854104884701302901958433",
                 "0.0927080410533667508002106930323208313699693597", 37, ctx));
  CHECK(close_to(P_q(0, cplx_text("-0.25", "0", ctx), ctx), "0.64557661375397593099341857649118624869958481", "0",
                 38, ctx));
  // P_{-1}(q) = 1/12 - sum sigma_1(m) q^m
  const Complex q = cplx(0.2, -0.1, ctx);
  const Complex direct = Complex(Real::from_rational(Rational(1, 12), ctx.bits())) -
                         (q + q * q * Real::from_long(3, ctx.bits()) + numeric::pow(q, 3) * Real::from_long(4, ctx.bits()) +
                          numeric::pow(q, 4) * Real::from_long(7, ctx.bits()));
  // tail: sigma_1(m) <= m^2, |q| < 0.224
  double tail = 0;
  for (int m = 5; m < 200; ++m) tail += m * m * std::pow(0.224, m);
  CHECK(numeric::abs(P_q(-1, q, ctx) - direct).to_double() < tail);

  CHECK_THROWS_AS(P_q(3, cplx(0.996, 0, ctx), ctx), DomainError);
  CHECK_THROWS_AS(P_q(1, cplx(0.1, 0, ctx), ctx), PoleError);
  CHECK_THROWS_AS(P_q(-1, cplx(0.5, 0, ctx), ctx, Representation::Lambert, 0.4), DomainError);
  CHECK_THROWS_AS(P_q(-1, cplx(0.99, 0, ctx), ctx, Representation::Lambert, kDefaultRMax, 50), PrecisionError);
}

TEST_CASE("Lambert and divisor forms agree at random q") {
  const PrecisionContext ctx(40, 10);
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> radius(0.0, 0.5);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (long s : {-5L, -3L, -1L, 0L, 2L, 3L, 4L, 7L}) {
    for (int trial = 0; trial < 6; ++trial) {
      const double r = radius(rng);
      const double a = angle(rng);
      const Complex q = cplx(r * std::cos(a), r * std::sin(a), ctx);
      const Complex lambert = P_q(s, q, ctx, Representation::Lambert);
      const Complex divisor = P_q(s, q, ctx, Representation::Divisor);
      CAPTURE(s);
      CAPTURE(r);
      const double scale = std::max(0.0, numeric::abs(lambert).log10_abs());
      CHECK(log10_diff(lambert, divisor) < scale - ctx.verify_digits());
    }
  }
}

TEST_CASE("Eisenstein series and g3") {
  const PrecisionContext ctx(40, 10);
  const mpfr_prec_t bits = ctx.bits();
  const Real pi = Real::pi(bits);
  CHECK(log10_diff(eisenstein_G(4, Complex(bits), ctx), Complex(numeric::pow(pi, 4) / 45L)) < -40);
  CHECK(log10_diff(g3(Complex(bits), ctx), Complex(numeric::pow(pi, 6) * 8L / 27L)) < -38);
  CHECK(close_to(eisenstein_G(4, cplx_text("0.05", "0", ctx), ctx), "41.9074806421429330352920399368086548662467781", "0",
                 37, ctx));
  CHECK(close_to(eisenstein_G(6, cplx_text("0.1", "0", ctx), ctx), "-839.991061476901051964112004749910040791225532", "0",
                 35, ctx));
  CHECK(close_to(g3(cplx_text("0.1", "0", ctx), ctx), "-117598.748606766147274975680664987405710771574", "0", 33, ctx));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-0.35, 0.35);
  for (int trial = 0; trial < 8; ++trial) {
    const Complex q = cplx(coord(rng), coord(rng), ctx);
    // dual forms
    for (long k2 : {4L, 6L, 8L}) {
      const Complex a = eisenstein_G(k2, q, ctx, Representation::Divisor);
      const Complex b = eisenstein_G(k2, q, ctx, Representation::Lambert);
      CHECK(log10_diff(a, b) < std::max(0.0, numeric::abs(a).log10_abs()) - ctx.verify_digits());
    }
    const Complex g3l = g3(q, ctx, Representation::Lambert);
    const Complex g3d = g3(q, ctx, Representation::Divisor);
    CHECK(log10_diff(g3l, g3d) < numeric::abs(g3l).log10_abs() - ctx.verify_digits());
    // g3 = 140 G6
    CHECK(log10_diff(g3l, eisenstein_G(6, q, ctx) * Real::from_long(140, bits)) <
          numeric::abs(g3l).log10_abs() - ctx.verify_digits());
    // G_2k = 2 zeta(2k) + 2 (2 pi i)^2k / (2k-1)! (-zeta(1-2k) - P_{1-2k}(q))
    for (long k2 : {4L, 6L}) {
      const Complex lambert = -Complex(Real::from_rational(exact::zeta_negative(k2 - 1), bits)) - P_q(1 - k2, q, ctx);
      Real factor = numeric::pow(pi * 2L, k2) * 2L / Real::from_integer(exact::factorial(k2 - 1), bits);
      if ((k2 / 2) % 2 == 1) factor = -factor;
      const Complex two_zeta(numeric::zeta_real(k2, ctx) * 2L);
      const Complex bridged = two_zeta + lambert * factor;
      const Complex G = eisenstein_G(k2, q, ctx);
      CHECK(log10_diff(G, bridged) < std::max(0.0, numeric::abs(G).log10_abs()) - ctx.verify_digits());
    }
  }
  // real q gives a real g3
  CHECK(g3(cplx(0.3, 0, ctx), ctx).im().log10_abs() < -40);
  CHECK_THROWS_AS(eisenstein_G(5, Complex(bits), ctx), DomainError);
  CHECK_THROWS_AS(eisenstein_G(2, Complex(bits), ctx), DomainError);
}

TEST_CASE("K_tau agrees with I_k and the exact form") {
  const PrecisionContext ctx(40, 10);
  const mpfr_prec_t bits = ctx.bits();
  for (long k : {3L, 5L, 7L, 9L}) {
    const Complex tau = cplx(0.3, -0.8, ctx);
    const Complex x = Complex(Real(bits), Real::pi(bits) * 2L) * tau;
    CHECK(log10_diff(K_tau(k, tau, ctx), numeric::numeric_I(k, x, ctx)) < -36);
    const SurdGaussian exact_tau(GaussianRational(Rational(1, 2), Rational(3, 2)));
    const Complex exact = numeric::eval_symbolic(symbolic::eval_K(static_cast<int>(k), exact_tau), ctx);
    CHECK(log10_diff(K_tau(k, numeric::to_complex(exact_tau, bits), ctx), exact) < -36);
  }
  // K_3(-i) = I_3(2 pi)
  const SurdGaussian minus_i(GaussianRational(0, -1));
  CHECK(symbolic::eval_K(3, minus_i) == symbolic::eval_I_closed(3, SurdGaussian(1)));
  CHECK_THROWS_AS(K_tau(4, cplx(0, 1, ctx), ctx), DomainError);
  CHECK_THROWS_AS(K_tau(3, Complex(bits), ctx), DomainError);
}

TEST_CASE("modular laws on the imaginary axis and at Gaussian points") {
  const PrecisionContext ctx(30, 10);
  const int digits = ctx.digits() - 2;
  std::vector<Complex> taus;
  for (int i = 0; i <= 9; ++i) taus.push_back(cplx(0.0, 0.3 + 0.3 * i, ctx));
  taus.push_back(cplx(0.25, 0.9, ctx));
  taus.push_back(cplx(-0.4, -0.7, ctx));
  for (long k : {3L, 5L, 7L}) {
    for (const auto& tau : taus) {
      CAPTURE(k);
      CAPTURE(tau.to_string(6));
      for (auto law : {ModularLaw::Periodicity, ModularLaw::Inversion, ModularLaw::KQuasi, ModularLaw::MTransform}) {
        CAPTURE(modular_law_name(law));
        CHECK(modular_check(law, k, tau, ctx).within(digits));
      }
      CHECK_FALSE(modular_check(ModularLaw::MTransformAsPrinted, k, tau, ctx).within(3));
    }
  }
  const std::vector<SurdGaussian> exact_taus = {SurdGaussian(GaussianRational(0, 1)), SurdGaussian(GaussianRational(0, 2)),
                                                SurdGaussian(GaussianRational(1, 1)),
                                                SurdGaussian(GaussianRational(Rational(1, 2), Rational(-1, 3))),
                                                SurdGaussian(GaussianRational(0, 1), 3)};
  for (long k : {3L, 5L, 7L, 9L}) {
    for (const auto& tau : exact_taus) {
      CAPTURE(k);
      CAPTURE(tau.to_string());
      CHECK(k_quasi_exact(k, tau).is_zero());
      for (auto law : {ModularLaw::Periodicity, ModularLaw::Inversion, ModularLaw::KQuasi, ModularLaw::MTransform}) {
        CHECK(modular_check(law, k, tau, ctx).within(digits));
      }
    }
  }
}

TEST_CASE("inversion at tau = -i is the x = 2 pi relation") {
  const PrecisionContext ctx(40, 10);
  const mpfr_prec_t bits = ctx.bits();
  const Complex minus_i = cplx(0, -1, ctx);
  const Complex p = P_tau(3, minus_i, ctx);
  CHECK(log10_diff(p, numeric::sum_S(3, Complex(Real::pi(bits) * 2L), ctx)) < -40);
  // P(-i) = -P(-i) + K(-i)  =>  2 S_3(2 pi) = I_3(2 pi)
  const Complex I3 = numeric::eval_symbolic(symbolic::eval_I_closed(3, SurdGaussian(1)), ctx);
  CHECK(log10_diff(p * Real::from_long(2, bits), I3) < -38);
  CHECK(modular_check(ModularLaw::Inversion, 3, SurdGaussian(GaussianRational(0, -1)), ctx).within(38));

  // tau = -i x / 2 pi with x = 3
  const Complex tau(Real(bits), -(Real::from_long(3, bits) / (Real::pi(bits) * 2L)));
  CHECK(modular_check(ModularLaw::Periodicity, 3, tau, ctx).within(38));
  CHECK_THROWS_AS(P_tau(3, cplx(0.5, 0, ctx), ctx), DomainError);
}

TEST_CASE("P_{-1} has a zero inside the disk") {
  // mpmath findroot: 0.068029843639202246236
  const PrecisionContext ctx(30, 10);
  const Complex root = cplx_text("0.068029843639202246236", "0", ctx);
  CHECK(numeric::abs(P_q(-1, root, ctx)).to_double() < 1e-19);
  CHECK(P_q(-1, cplx(0.06, 0, ctx), ctx).re().sign() > 0);
  CHECK(P_q(-1, cplx(0.07, 0, ctx), ctx).re().sign() < 0);
}

TEST_CASE("winding numbers") {
  const PrecisionContext ctx(20, 5);
  CHECK(winding_number(-1, 0.05, 1024, ctx) == 0);
  // mpmath argument-principle sums give 2 and 4
  CHECK(winding_number(-1, 0.7, 1024, ctx) == 2);
  CHECK(winding_number(-5, 0.5, 1024, ctx) == 4);
  CHECK(winding_number(3, 0.5, 256, ctx) == 0);
  CHECK_THROWS_AS(winding_number(-1, 0.999, 64, ctx), DomainError);
  CHECK_THROWS_AS(winding_number(-1, 0.5, 2, ctx), DomainError);
}

TEST_CASE("double-precision plot evaluation matches the high-precision one") {
  const PrecisionContext ctx(30, 10);
  for (long s : {-5L, -1L, 3L}) {
    for (auto qd : {std::complex<double>(0.3, 0.4), std::complex<double>(-0.8, 0.1), std::complex<double>(0.0, -0.95)}) {
      std::complex<double> v;
      REQUIRE(P_double(s, qd, 100000, v));
      const Complex ref = P_q(s, cplx(qd.real(), qd.imag(), ctx), ctx);
      const double err = std::abs(v - std::complex<double>(ref.re().to_double(), ref.im().to_double()));
      CHECK(err <= 1e-10 * std::max(1.0, std::abs(v)));
    }
  }
  std::complex<double> g;
  REQUIRE(g3_double({0.1, 0.0}, 1000, g));
  CHECK(std::fabs(g.real() + 117598.748606766147) < 1e-7);
}

TEST_CASE("plot rendering") {
  PlotSpec spec;
  spec.width = 64;
  spec.height = 48;
  spec.series_index = -1;
  spec.threads = 1;
  const PlotResult serial = render_plot(spec);
  const std::string header = "P6\n64 48 255\n";
  REQUIRE(serial.ppm.size() == header.size() + 64 * 48 * 3);
  CHECK(serial.ppm.compare(0, header.size(), header) == 0);
  spec.threads = 4;
  CHECK(render_plot(spec).ppm == serial.ppm);

  // corner pixel lies outside the disk: white, NaN value
  CHECK(serial.ppm.substr(header.size(), 3) == std::string(3, '\xff'));
  CHECK(std::isnan(serial.values[0]));
  // pixel next to the centre: q ~ 0.015 - 0.020i, P_{-1} ~ 1/12 - q, arg > 0, drawn black
  const std::size_t centre = 24 * 64 + 32;
  std::complex<double> near;
  REQUIRE(P_double(-1, pixel_q(spec, 32, 24), 1000, near));
  CHECK(serial.values[centre] == doctest::Approx(std::arg(near)));
  CHECK(serial.values[centre] > 0.0);
  CHECK(serial.ppm.substr(header.size() + 3 * centre, 3) == std::string(3, '\0'));
  CHECK(serial.diagnostics.pixels_in_disk > 0);
  CHECK(serial.diagnostics.truncation_failures == 0);
  CHECK(serial.diagnostics.to_json().find("\"pixels_in_disk\"") != std::string::npos);

  const auto q = pixel_q(spec, 0, 0);
  CHECK(q.real() == doctest::Approx((1.0 / 64 - 1.0) * spec.r_max));
  CHECK(q.imag() == doctest::Approx((1.0 - 1.0 / 48) * spec.r_max));

  // starved term budget: pixels turn magenta and are counted
  PlotSpec starved = spec;
  starved.max_terms = 2;
  const PlotResult bad = render_plot(starved);
  CHECK(bad.diagnostics.truncation_failures > 0);
  CHECK(bad.ppm.find("\xff\x00\xff", header.size()) != std::string::npos);

  PlotSpec g3spec = spec;
  g3spec.function = PlotFunction::G3;
  g3spec.color_map = ColorMap::SignedImag;
  CHECK(render_plot(g3spec).diagnostics.truncation_failures == 0);

  PlotSpec invalid = spec;
  invalid.r_max = 1.0;
  CHECK_THROWS_AS(render_plot(invalid), DomainError);
  invalid = spec;
  invalid.width = 0;
  CHECK_THROWS_AS(render_plot(invalid), DomainError);
  invalid = spec;
  invalid.series_index = 1;
  CHECK_THROWS_AS(render_plot(invalid), PoleError);
}
