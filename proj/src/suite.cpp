#include "zforge/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include <json.hpp>

#include "zforge/errors.hpp"
#include "zforge/exact/arith.hpp"
#include "zforge/exact/bernoulli.hpp"
#include "zforge/identities/bernoulli_identities.hpp"
#include "zforge/identities/classical.hpp"
#include "zforge/identities/families.hpp"
#include "zforge/identities/verify.hpp"
#include "zforge/numeric/mellin.hpp"
#include "zforge/numeric/special.hpp"
#include "zforge/qplane/modular.hpp"
#include "zforge/qplane/plot.hpp"
#include "zforge/qplane/qseries.hpp"
#include "zforge/symbolic/contour.hpp"

namespace zforge::suite {

using namespace identities;
using numeric::Complex;
using numeric::PrecisionContext;
using numeric::Real;
using symbolic::GaussianRational;

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string residual_text(double log10_residual) { return fmt("log10|res| = %.1f", log10_residual); }

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckResult make(std::string id, std::string title) {
  CheckResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  return r;
}

CheckResult finish(CheckResult r, const Timer& timer) {
  r.seconds = timer.seconds();
  r.pass = std::all_of(r.details.begin(), r.details.end(), [](const Detail& d) { return d.pass; });
  if (r.budget_seconds > 0.0) {
    r.details.push_back({fmt("runtime < %.0f s", r.budget_seconds), r.seconds < r.budget_seconds,
                         fmt("%.2f s", r.seconds)});
    r.pass = r.pass && r.seconds < r.budget_seconds;
  }
  return r;
}

// Residual below 10^-digits in absolute terms.
void add_residuals(CheckResult& r, const std::vector<VerifyResult>& results, double digits) {
  for (const auto& v : results) {
    const double lr = v.log10_residual();
    r.details.push_back({v.name, lr < -digits, residual_text(lr)});
  }
}

Identity pi3_combination() {
  return eliminate_atom(zeta4m_minus_1(1), pq(3, 2, 1), BasisAtom::zeta(3)).renamed("pi3-combination");
}

const SurdGaussian kOne(1);
const SurdGaussian kHalf(Rational(1, 2));
const SurdGaussian kTwo(2);

// zeta(k) = c pi^k - sum coeff * term, moved to one side.
Identity zeta_display(const std::string& name, int k, const SurdGaussian& pi_coef, std::vector<LinearTerm> terms) {
  SymbolicValue constant(BasisAtom::zeta(k), SurdGaussian(1));
  constant.add(BasisAtom::pi_pow(k), -pi_coef);
  return Identity(name, constant, std::move(terms));
}

// The binomial display with the -1/2 it needs.
Rational binomial_coefficient(long m) {
  Rational sum;
  for (long j = 0; j <= 2 * m; ++j) {
    const Rational t = Rational(exact::binomial(4 * m, 2 * j)) * exact::bernoulli(2 * j) * exact::bernoulli(4 * m - 2 * j);
    sum += j % 2 == 0 ? t : -t;
  }
  return Rational(-1, 2) * Rational(2).pow(4 * m - 1) / Rational(exact::factorial(4 * m)) * sum;
}

bool same_coefficients(const Identity& a, const Identity& b) { return a.renamed("x") == b.renamed("x"); }

std::vector<SurdGaussian> exact_arguments() {
  return {SurdGaussian(1),
          SurdGaussian(2),
          SurdGaussian(Rational(1, 2)),
          SurdGaussian(3),
          SurdGaussian(Rational(1, 3)),
          SurdGaussian::sqrt(3),
          SurdGaussian(GaussianRational(1, 1)),
          SurdGaussian(GaussianRational(1, -1))};
}

// Criteria ------------------------------------------------------------------

CheckResult single_identity(int number, const std::string& title, const Identity& id) {
  const Timer timer;
  CheckResult r = make("criterion-" + std::to_string(number), title);
  r.budget_seconds = 1.0;
  add_residuals(r, {verify(id, PrecisionContext(100, 10))}, 90);
  return finish(std::move(r), timer);
}

CheckResult criterion4(unsigned threads) {
  const Timer timer;
  CheckResult r = make("criterion-4", "pq, pi^3, surd, pi^3/180 combination and log 2 identities at P = 100");
  r.budget_seconds = 5.0;
  const std::vector<Identity> ids = {pq(3, 2, 1), pq(7, 2, 1), pi_power(1), surd(3, 3), pi3_combination(),
                                     log2_m0()};
  add_residuals(r, verify_all(ids, PrecisionContext(100, 10), threads), 90);
  return finish(std::move(r), timer);
}

CheckResult criterion5() {
  const Timer timer;
  CheckResult r = make("criterion-5", "exact checks");
  r.budget_seconds = 10.0;

  long mismatches = 0;
  for (int k = 3; k <= 13; k += 2) {
    for (const auto& w : exact_arguments()) {
      if (!(symbolic::eval_I_closed(k, w) == symbolic::eval_I_residue(k, w))) ++mismatches;
    }
  }
  r.details.push_back({"closed form = residue form, k = 3..13 x 8 arguments", mismatches == 0,
                       std::to_string(mismatches) + " mismatches"});

  long nonzero = 0;
  for (int m = 1; m <= 20; ++m) {
    if (!symbolic::eval_I_closed(4 * m + 1, kOne).is_zero()) ++nonzero;
  }
  r.details.push_back({"I_{4m+1}(2 pi) = 0, m = 1..20", nonzero == 0, std::to_string(nonzero) + " nonzero"});

  long bernoulli_failures = 0;
  for (long m = 1; m <= 50; ++m) {
    const auto [lhs, rhs] = thm11(m);
    if (!cor5(m).is_zero() || !thm10(m).is_zero() || lhs != rhs) ++bernoulli_failures;
  }
  r.details.push_back({"Bernoulli identities (three families), m = 1..50", bernoulli_failures == 0,
                       std::to_string(bernoulli_failures) + " failures"});

  const std::vector<std::pair<Identity, Identity>> displays = {
      {zeta4m_minus_1(1), zeta_display("zeta(3), 7/180", 3, SurdGaussian(Rational(7, 180)), {{Rational(2), SumTerm::S(3, kOne)}})},
      {zeta4m_minus_1(2),
       zeta_display("zeta(7), 19/56700", 7, SurdGaussian(Rational(19, 56700)), {{Rational(2), SumTerm::S(7, kOne)}})},
      {zeta4m_minus_1(3), zeta_display("zeta(11), binomial display", 11, SurdGaussian(binomial_coefficient(3)),
                                       {{Rational(2), SumTerm::S(11, kOne)}})},
      {zeta4m_minus_1(4), zeta_display("zeta(15), binomial display", 15, SurdGaussian(binomial_coefficient(4)),
                                       {{Rational(2), SumTerm::S(15, kOne)}})},
      {zeta4m_minus_1(5), zeta_display("zeta(19), binomial display", 19, SurdGaussian(binomial_coefficient(5)),
                                       {{Rational(2), SumTerm::S(19, kOne)}})},
      {pq(3, 2, 1), zeta_display("zeta(3), 37/900", 3, SurdGaussian(Rational(37, 900)),
                                 {{Rational(8, 5), SumTerm::S(3, kHalf)}, {Rational(2, 5), SumTerm::S(3, kTwo)}})},
      {pq(7, 2, 1), printed_pq7_display()},
      {zeta4m_plus_1(1), zeta_display("zeta(5), 1/294", 5, SurdGaussian(Rational(1, 294)),
                                      {{Rational(72, 35), SumTerm::S(5, kOne)}, {Rational(2, 35), SumTerm::T(5, kOne)}})},
      {pi_power(1), Identity("pi^3 = 720 S(pi) - 900 S(2pi) + 180 S(4pi)", SymbolicValue(BasisAtom::pi_pow(3), SurdGaussian(1)),
                             {{Rational(-720), SumTerm::S(3, kHalf)},
                              {Rational(900), SumTerm::S(3, kOne)},
                              {Rational(-180), SumTerm::S(3, kTwo)}})},
      {surd(3, 3), printed_surd_constant()},
      {log2_m0(), [] {
         SymbolicValue c(BasisAtom::pi_pow(1), SurdGaussian(Rational(-1, 6)));
         c.add(BasisAtom::log2(), SurdGaussian(Rational(3, 4)));
         return Identity("S_1(2pi) + T_1(2pi) = pi/6 - (3/4) log 2", c,
                         {{Rational(1), SumTerm::S(1, kOne)}, {Rational(1), SumTerm::T(1, kOne)}});
       }()},
      {pi3_combination(), Identity("pi^3/180 combination", SymbolicValue(BasisAtom::pi_pow(3), SurdGaussian(Rational(1, 180))),
                                               {{Rational(-4), SumTerm::S(3, kHalf)},
                                                {Rational(5), SumTerm::S(3, kOne)},
                                                {Rational(-1), SumTerm::S(3, kTwo)}})},
  };
  for (const auto& [generated, display] : displays) {
    const bool match = same_coefficients(generated, display) || same_coefficients(generated, display.scaled(Rational(-1)));
    r.details.push_back({"display: " + display.name(), match, match ? "match" : "generated " + generated.name() + " differs"});
  }

  // -35 zeta(5) = 72 S_5(2pi) + 2 T_5(2pi) - (5/42) pi^5
  const Identity general = printed_zeta4m_plus_1_display(1);
  const bool consistent = general.constant() == zeta4m_plus_1(1).scaled(Rational(-35)).constant() &&
                          general.constant().coefficient(BasisAtom::zeta(5)).re == Rational(-35) &&
                          general.constant().coefficient(BasisAtom::pi_pow(5)).re == Rational(5, 42) &&
                          general.coefficient(SumTerm::S(5, kOne)) == Rational(-72) &&
                          general.coefficient(SumTerm::T(5, kOne)) == Rational(-2) && general.terms().size() == 2;
  r.details.push_back({"general zeta(4m+1) display at m = 1: -35, 72, 2, -5 pi^5/42", consistent,
                       consistent ? "consistent" : "inconsistent"});
  return finish(std::move(r), timer);
}

CheckResult criterion6() {
  const Timer timer;
  CheckResult r = make("criterion-6", "regression fixtures for the two typos");
  r.budget_seconds = 1.0;
  const PrecisionContext ctx(50, 10);
  const mpfr_prec_t bits = ctx.bits();

  const VerifyResult binomial = verify(printed_binomial_display(1), ctx);
  const Real pi = Real::pi(bits);
  const Complex predicted(pi * pi * pi * 7L / 60L);
  const double gap = numeric::abs(binomial.residual - predicted).log10_abs();
  r.details.push_back({"binomial display fails", !binomial.pass, residual_text(binomial.log10_residual())});
  r.details.push_back({"binomial residual = 7 pi^3/90 + 7 pi^3/180", gap < -(ctx.verify_digits()),
                       fmt("log10|res - 7 pi^3/60| = %.1f", gap)});

  SymbolicValue expected(BasisAtom::zeta(5), SurdGaussian(Rational(-5, 2)));
  expected.add(BasisAtom::pi_pow(5), SurdGaussian(Rational(1, 126)));
  const SymbolicValue i5 = symbolic::eval_I_closed(5, SurdGaussian(GaussianRational(1, 1)));
  const bool is126 = i5 == expected;
  r.details.push_back({"I_5(2 pi (1+i)) constant pi^5/126", is126, symbolic::render_ascii(i5)});
  const VerifyResult printed = verify(printed_i5_constant(), ctx);
  r.details.push_back({"pi^5/135 replay fails", !printed.pass, residual_text(printed.log10_residual())});
  const VerifyResult downstream = verify(zeta4m_plus_1(1), ctx);
  r.details.push_back({"downstream zeta(5) identity passes", downstream.pass, residual_text(downstream.log10_residual())});
  return finish(std::move(r), timer);
}

CheckResult criterion7(unsigned threads) {
  const Timer timer;
  CheckResult r = make("criterion-7", "functional equation at 50 random arguments per k");
  r.budget_seconds = 30.0;
  const PrecisionContext ctx(40, 10);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(1, 12);
  std::uniform_int_distribution<long> den(1, 7);
  std::uniform_int_distribution<int> pick(0, 4);
  const std::int64_t radicands[] = {1, 2, 3, 5, 7};
  for (long k : {3L, 5L, 7L, 9L, 11L}) {
    std::vector<Identity> ids;
    for (int trial = 0; trial < 50; ++trial) {
      const SurdGaussian w(GaussianRational(Rational(num(rng), den(rng))), radicands[pick(rng)]);
      ids.push_back(functional_equation(k, w));
    }
    double worst = -1e9;
    for (const auto& v : verify_all(ids, ctx, threads)) worst = std::max(worst, v.log10_residual() - v.log10_scale);
    r.details.push_back({"k = " + std::to_string(k), worst <= -(ctx.digits() - 2), fmt("worst scaled log10|res| = %.1f", worst)});
  }
  return finish(std::move(r), timer);
}

CheckResult criterion8() {
  const Timer timer;
  CheckResult r = make("criterion-8", "classical sums at P = 50");
  r.budget_seconds = 30.0;
  const PrecisionContext ctx(50, 10);
  auto run = [&](Classical which, ClassicalParams p) {
    for (const auto& v : verify_classical(which, p, ctx)) {
      r.details.push_back({v.name, v.pass, residual_text(v.log10_residual())});
    }
  };
  run(Classical::Letter, {});
  for (long k = 1; k <= 3; ++k) run(Classical::Glaisher, {k, 1, Scale{}});
  for (long k = 0; k <= 2; ++k) run(Classical::Apostol, {k, 1, Scale{}});
  run(Classical::Entry13, {7, 1, parse_scale("pi")});
  run(Classical::Entry13, {2, 1, parse_scale("2pi")});
  run(Classical::Entry21, {1, 1, parse_scale("pi")});
  run(Classical::Entry21, {1, 2, parse_scale("pi/2")});
  run(Classical::Entry8, {1, 1, parse_scale("2")});
  run(Classical::Zucker, {1, 1, parse_scale("1")});
  return finish(std::move(r), timer);
}

CheckResult criterion9() {
  const Timer timer;
  CheckResult r = make("criterion-9", "Mellin-Barnes quadrature against the polylogarithm");
  r.budget_seconds = 60.0;
  const PrecisionContext ctx(30, 10);
  const mpfr_prec_t bits = ctx.bits();
  const std::vector<std::pair<long, Rational>> cases = {{3, Rational(1)}, {2, Rational(1, 2)}, {3, Rational(10)}};
  for (const auto& [s, u] : cases) {
    const Real ur = Real::from_rational(u, bits);
    const auto q = numeric::mellin_barnes_check(s, ur, Real::from_long(2, bits), Real::from_long(40, bits), ctx);
    const Complex series = numeric::polylog_series(s, Complex(numeric::exp(-ur)), ctx);
    const double diff = numeric::abs(Complex(q.value) - series).log10_abs();
    r.details.push_back({"s = " + std::to_string(s) + ", u = " + u.to_string(), diff < -18,
                         fmt("log10|quadrature - series| = %.1f", diff)});
  }
  return finish(std::move(r), timer);
}

CheckResult criterion10() {
  const Timer timer;
  CheckResult r = make("criterion-10", "q-plane dual forms, modular laws and winding numbers at P = 30");
  r.budget_seconds = 60.0;
  const PrecisionContext ctx(30, 10);
  const mpfr_prec_t bits = ctx.bits();
  const int digits = ctx.digits() - 2;

  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> radius(0.0, 0.5);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  double worst_dual = -1e9;
  for (int trial = 0; trial < 20; ++trial) {
    const double rad = radius(rng);
    const double a = angle(rng);
    const Complex q = Complex::from_doubles(rad * std::cos(a), rad * std::sin(a), bits);
    auto record = [&](const Complex& x, const Complex& y) {
      const double scale = std::max(0.0, numeric::abs(x).log10_abs());
      worst_dual = std::max(worst_dual, numeric::abs(x - y).log10_abs() - scale);
    };
    for (long s : {-5L, -1L, 0L, 3L}) {
      record(qplane::P_q(s, q, ctx, qplane::Representation::Lambert), qplane::P_q(s, q, ctx, qplane::Representation::Divisor));
    }
    for (long k2 : {4L, 6L}) {
      record(qplane::eisenstein_G(k2, q, ctx, qplane::Representation::Lambert),
             qplane::eisenstein_G(k2, q, ctx, qplane::Representation::Divisor));
    }
    record(qplane::g3(q, ctx, qplane::Representation::Lambert), qplane::g3(q, ctx, qplane::Representation::Divisor));
  }
  r.details.push_back({"Lambert = divisor form, 20 random |q| <= 0.5", worst_dual <= -digits,
                       fmt("worst scaled log10|diff| = %.1f", worst_dual)});

  std::vector<Complex> taus;
  for (int i = 0; i <= 9; ++i) taus.push_back(Complex::from_doubles(0.0, 0.3 + 0.3 * i, bits));
  const std::vector<SurdGaussian> exact_taus = {SurdGaussian(GaussianRational(0, 1)), SurdGaussian(GaussianRational(1, 1)),
                                                SurdGaussian(GaussianRational(Rational(1, 2), Rational(-1, 3))),
                                                SurdGaussian(GaussianRational(0, 1), 3)};
  const qplane::ModularLaw laws[] = {qplane::ModularLaw::Periodicity, qplane::ModularLaw::Inversion,
                                     qplane::ModularLaw::KQuasi, qplane::ModularLaw::MTransform};
  for (auto law : laws) {
    double worst = -1e9;
    for (long k : {3L, 5L, 7L}) {
      auto record = [&](const qplane::ModularResult& m) {
        worst = std::max(worst, m.log10_residual() - m.log10_scale);
      };
      for (const auto& tau : taus) record(qplane::modular_check(law, k, tau, ctx));
      for (const auto& tau : exact_taus) record(qplane::modular_check(law, k, tau, ctx));
    }
    r.details.push_back({"modular law " + qplane::modular_law_name(law) + ", k = 3, 5, 7", worst <= -digits,
                         fmt("worst scaled log10|res| = %.1f", worst)});
  }

  const std::pair<long, double> windings[] = {{-1, 0.7}, {-5, 0.5}};
  for (const auto& [s, rad] : windings) {
    std::string label = "winding_number(" + std::to_string(s) + ", " + fmt("%.1f", rad) + ") = 0";
    try {
      const long w = qplane::winding_number(s, rad, 1024, ctx);
      r.details.push_back({label, w == 0, "winding " + std::to_string(w)});
    } catch (const Error& e) {
      r.details.push_back({label, false, e.what()});
    }
  }
  return finish(std::move(r), timer);
}

CheckResult criterion11(unsigned threads) {
  const Timer timer;
  CheckResult r = make("criterion-11", "phase plots of P_-1 and P_-5 at 512 x 512");
  r.budget_seconds = 120.0;
  const struct {
    long s;
    double radius;
    double threshold;
  } figures[] = {{-1, 0.7, 1e-3}, {-5, 0.5, 1e-9}};
  for (const auto& f : figures) {
    qplane::PlotSpec spec;
    spec.series_index = f.s;
    spec.threads = threads;
    const qplane::PlotResult first = qplane::render_plot(spec);
    spec.threads = 1;
    const qplane::PlotResult second = qplane::render_plot(spec);
    const std::string tag = "P_" + std::to_string(f.s);
    r.details.push_back({tag + " byte-identical across runs and thread counts", first.ppm == second.ppm,
                         std::to_string(first.ppm.size()) + " bytes"});
    r.details.push_back({tag + " no truncation failures", first.diagnostics.truncation_failures == 0,
                         std::to_string(first.diagnostics.truncation_failures) + " failures"});
    const double fraction = qplane::fraction_below(spec, first, f.radius, f.threshold);
    r.details.push_back({tag + fmt(": >= 90%% of |q| <= %.1f", f.radius) + fmt(" with |arg| < %.0e", f.threshold),
                         fraction >= 0.9, fmt("fraction %.4f", fraction)});
  }
  return finish(std::move(r), timer);
}

std::vector<Identity> quick_set() {
  return {zeta4m_minus_1(1), zeta4m_minus_1(2), pq(3, 2, 1), pq(7, 2, 1), zeta4m_plus_1(1), pi_power(1), surd(3, 3),
          log2_m0(), pi3_combination()};
}

}  // namespace

CheckResult run_criterion(int number, unsigned threads) {
  switch (number) {
    case 1: return single_identity(1, "zeta(3) prototype at P = 100", zeta4m_minus_1(1));
    case 2: return single_identity(2, "zeta(7) at P = 100", zeta4m_minus_1(2));
    case 3: return single_identity(3, "zeta(5) with the T term at P = 100", zeta4m_plus_1(1));
    case 4: return criterion4(threads);
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7(threads);
    case 8: return criterion8();
    case 9: return criterion9();
    case 10: return criterion10();
    case 11: return criterion11(threads);
    default: throw DomainError("no criterion " + std::to_string(number));
  }
}

std::vector<CheckResult> run(Level level, const PrecisionContext& ctx, unsigned threads) {
  std::vector<CheckResult> out;
  if (level == Level::Full) {
    for (int n = 1; n <= 11; ++n) out.push_back(run_criterion(n, threads));
    return out;
  }
  const auto ids = quick_set();
  const Timer timer;
  const auto results = verify_all(ids, ctx, threads);
  const double elapsed = timer.seconds();
  for (const auto& v : results) {
    CheckResult r = make(v.name, v.name);
    r.pass = v.pass;
    r.seconds = elapsed;
    r.details.push_back({"residual", v.pass,
                         residual_text(v.log10_residual()) + fmt(", tolerance %.1f", v.log10_tolerance)});
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return out;
}

Level level_from_name(const std::string& name) {
  if (name == "quick") return Level::Quick;
  if (name == "full") return Level::Full;
  throw ParseError("unknown suite level: " + name);
}

std::string level_name(Level level) { return level == Level::Quick ? "quick" : "full"; }

std::string to_json(const std::vector<CheckResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json details = nlohmann::json::array();
    for (const auto& d : r.details) details.push_back({{"label", d.label}, {"pass", d.pass}, {"value", d.value}});
    arr.push_back({{"id", r.id},
                   {"title", r.title},
                   {"pass", r.pass},
                   {"seconds", r.seconds},
                   {"budget_seconds", r.budget_seconds},
                   {"details", details}});
  }
  return arr.dump(2);
}

}  // namespace zforge::suite
