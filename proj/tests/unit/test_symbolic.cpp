#include "doctest.h"

#include <vector>

#include "zforge/errors.hpp"
#include "zforge/symbolic/argument.hpp"
#include "zforge/symbolic/contour.hpp"
#include "zforge/symbolic/gaussian.hpp"
#include "zforge/symbolic/value.hpp"

using namespace zforge;
using namespace zforge::symbolic;

namespace {

SymbolicValue zeta_pi(int k, const Rational& zeta_coef, const SurdGaussian& pi_coef) {
  SymbolicValue v(BasisAtom::zeta(k), zeta_coef);
  v.add(BasisAtom::pi_pow(k), pi_coef);
  return v;
}

const GaussianRational kI = GaussianRational::i();

std::vector<SurdGaussian> omega_set() {
  return {SurdGaussian(1),
          SurdGaussian(2),
          SurdGaussian(Rational(1, 2)),
          SurdGaussian(3),
          SurdGaussian(Rational(1, 3)),
          SurdGaussian::sqrt(3),
          SurdGaussian(GaussianRational(1, 1)),
          SurdGaussian(GaussianRational(1, -1))};
}

}  // namespace

TEST_CASE("gaussian rationals") {
  const GaussianRational a(Rational(1, 2), Rational(-3, 4));
  CHECK(a.to_string() == "1/2-3/4i");
  CHECK(a * a.inverse() == GaussianRational(1));
  CHECK(a.conj().conj() == a);
  CHECK(kI.pow(4) == GaussianRational(1));
  CHECK(GaussianRational(1, 1).pow(4) == GaussianRational(-4));
  CHECK_THROWS_AS(GaussianRational().inverse(), DomainError);
}

TEST_CASE("surd values") {
  const SurdGaussian r12(GaussianRational(1), 12);
  CHECK(r12.surd() == 3);
  CHECK(r12.coefficient() == GaussianRational(2));
  const SurdGaussian s3 = SurdGaussian::sqrt(3);
  CHECK(s3 * s3 == SurdGaussian(3));
  CHECK((s3 * SurdGaussian::sqrt(2)).surd() == 6);
  CHECK(s3.inverse() == SurdGaussian(GaussianRational(Rational(1, 3)), 3));
  CHECK(s3.pow(3) == SurdGaussian(GaussianRational(3), 3));
  CHECK(SurdGaussian(GaussianRational(0), 5).surd() == 1);
  CHECK(compare_real_parts(SurdGaussian::sqrt(2), SurdGaussian(Rational(3, 2))) < 0);
  CHECK(compare_real_parts(SurdGaussian::sqrt(3), SurdGaussian(Rational(17, 10))) > 0);
}

TEST_CASE("symbolic value reduction and render") {
  SymbolicValue v(BasisAtom::zeta(4), Rational(1));
  CHECK(v == SymbolicValue(BasisAtom::pi_pow(4), Rational(1, 90)));
  SymbolicValue z = zeta_pi(3, Rational(-1), Rational(7, 180));
  CHECK(render(z, RenderFormat::Text) == "(7/180)·π^3 − ζ(3)");
  CHECK(render(SymbolicValue(), RenderFormat::Text) == "0");
  SymbolicValue l(BasisAtom::pi_pow(1), Rational(1, 6));
  l.add(BasisAtom::log2(), Rational(-3, 4));
  CHECK(render(l, RenderFormat::Text) == "(1/6)·π^1 − (3/4)·log2");
  CHECK(render_ascii(z) == "(7/180)*pi^3 - zeta(3)");
  CHECK((z - z).is_zero());
  const std::string json = render(z, RenderFormat::Json);
  CHECK(json.find("\"atom\":\"zeta(3)\"") != std::string::npos);
  CHECK(BasisAtom::from_tag("pi^-2*zeta(3)") == BasisAtom::zeta(3).times_pi(-2));
  CHECK_THROWS_AS(BasisAtom::from_tag("zeta(x)"), ParseError);
}

TEST_CASE("assert_real") {
  const SymbolicValue z = zeta_pi(3, Rational(-1), Rational(7, 180));
  CHECK(&assert_real(z) == &z);
  CHECK_NOTHROW(assert_real(eval_I_closed(5, SurdGaussian(GaussianRational(1, 1)))));
  const SymbolicValue bad(BasisAtom::zeta(3), SurdGaussian(kI));
  CHECK_THROWS_AS(assert_real(bad), ImaginaryResidueError);
}

TEST_CASE("contour integral closed form examples") {
  CHECK(eval_I_closed(3, SurdGaussian(1)) == zeta_pi(3, Rational(-1), Rational(7, 180)));
  CHECK(eval_I_closed(7, SurdGaussian(1)) == zeta_pi(7, Rational(-1), Rational(19, 56700)));
  CHECK(eval_I_closed(5, SurdGaussian(Rational(1, 2))) == zeta_pi(5, Rational(-15, 32), Rational(1, 576)));
  // The printed constant pi^5/135 does not survive exact evaluation; 126 does.
  const SymbolicValue i5 = eval_I_closed(5, SurdGaussian(GaussianRational(1, 1)));
  CHECK(i5 == zeta_pi(5, Rational(-5, 2), Rational(1, 126)));
  CHECK(i5 != zeta_pi(5, Rational(-5, 2), Rational(1, 135)));
  CHECK(eval_I_closed(5, SurdGaussian(1)).is_zero());
  CHECK_THROWS_AS(eval_I_closed(4, SurdGaussian(1)), DomainError);
  CHECK_THROWS_AS(eval_I_closed(1, SurdGaussian(1)), DomainError);
  CHECK_THROWS_AS(eval_I_closed(3, SurdGaussian()), DomainError);
}

TEST_CASE("residue form agrees with closed form") {
  CHECK(eval_I_residue(3, SurdGaussian(1)) == zeta_pi(3, Rational(-1), Rational(7, 180)));
  CHECK(eval_I_residue(7, SurdGaussian(1)) == zeta_pi(7, Rational(-1), Rational(19, 56700)));
  for (int k = 3; k <= 13; k += 2) {
    for (const auto& w : omega_set()) {
      CAPTURE(k);
      CAPTURE(w.to_string());
      CHECK(eval_I_closed(k, w) == eval_I_residue(k, w));
    }
  }
}

TEST_CASE("I_{4m+1}(2 pi) vanishes") {
  for (int m = 1; m <= 20; ++m) CHECK(eval_I_closed(4 * m + 1, SurdGaussian(1)).is_zero());
}

TEST_CASE("double application of the functional equation") {
  for (int k = 3; k <= 13; k += 2) {
    const long sign = ((k + 1) / 2) % 2 == 0 ? 1 : -1;
    for (const auto& w : omega_set()) {
      CAPTURE(k);
      CAPTURE(w.to_string());
      const SymbolicValue rhs = eval_I_closed(k, w.inverse()).scaled(w.pow(k - 1) * SurdGaussian(sign));
      CHECK(eval_I_closed(k, w) == rhs);
    }
  }
}

TEST_CASE("printed double-application factor (1/omega)^(k-1) fails") {
  // I_3(4 pi) vs I_3(pi): zeta coefficients -5/2 and -5/8 differ by omega^2 = 4.
  const SurdGaussian w(2);
  const SymbolicValue printed = eval_I_closed(3, w.inverse()).scaled(w.inverse().pow(2));
  CHECK(eval_I_closed(3, w) != printed);
  CHECK(eval_I_closed(3, w).coefficient(BasisAtom::zeta(3)) == GaussianRational(Rational(-5, 2)));
  CHECK(eval_I_closed(3, w.inverse()).coefficient(BasisAtom::zeta(3)) == GaussianRational(Rational(-5, 8)));
}

TEST_CASE("K form") {
  CHECK(eval_K(5, SurdGaussian(kI)).is_zero());
  CHECK(eval_K(3, SurdGaussian(-kI)) == zeta_pi(3, Rational(-1), Rational(7, 180)));
  for (int k = 3; k <= 11; k += 2) {
    for (const auto& w : omega_set()) {
      const SurdGaussian tau = w * SurdGaussian(-kI);  // i tau = omega
      CHECK(eval_K(k, tau) == eval_I_closed(k, w));
    }
  }
  // K_3(-1/tau) = -tau^-2 K_3(tau) at tau = 2i
  const SurdGaussian tau(GaussianRational(0, 2));
  const SurdGaussian inv = SurdGaussian(-1) * tau.inverse();
  CHECK(eval_K(3, inv) == eval_K(3, tau).scaled(SurdGaussian(-1) * tau.pow(-2)));
  CHECK_THROWS_AS(eval_K(3, SurdGaussian()), DomainError);
}

TEST_CASE("conjugation symmetry") {
  for (int k = 3; k <= 13; k += 2) {
    for (const auto& w : omega_set()) CHECK(eval_I_closed(k, w.conj()) == eval_I_closed(k, w).conj());
  }
}

TEST_CASE("weight one values") {
  // I_1(2 pi (1+i)) = -pi/24 + (1/4) log 2
  SymbolicValue expected(BasisAtom::pi_pow(1), Rational(-1, 24));
  expected.add(BasisAtom::log2(), Rational(1, 4));
  CHECK(eval_I_weight_one(SurdGaussian(GaussianRational(1, 1))).conj() ==
        eval_I_weight_one(SurdGaussian(GaussianRational(1, -1))));
  const SymbolicValue sum = eval_I_weight_one(SurdGaussian(GaussianRational(1, 1)));
  CHECK(sum.coefficient(BasisAtom::log2()) == GaussianRational(Rational(1, 4)));
  // I_1(pi) = pi/8 - (1/2) log 2
  SymbolicValue half(BasisAtom::pi_pow(1), Rational(1, 8));
  half.add(BasisAtom::log2(), Rational(-1, 2));
  CHECK(eval_I_weight_one(SurdGaussian(Rational(1, 2))) == half);
  CHECK_THROWS_AS(eval_I_weight_one(SurdGaussian(3)), DomainError);
}

TEST_CASE("argument grammar") {
  CHECK(parse_argument("2pi") == SurdGaussian(1));
  CHECK(parse_argument("2*pi") == SurdGaussian(1));
  CHECK(parse_argument("pi") == SurdGaussian(Rational(1, 2)));
  CHECK(parse_argument("4 pi") == SurdGaussian(2));
  CHECK(parse_argument("2pi/3") == SurdGaussian(Rational(1, 3)));
  CHECK(parse_argument("pi*sqrt(3)") == SurdGaussian(GaussianRational(Rational(1, 2)), 3));
  CHECK(parse_argument("2pi*(1+i)") == SurdGaussian(GaussianRational(1, 1)));
  CHECK(parse_argument("pi*(1-i)") == SurdGaussian(GaussianRational(Rational(1, 2), Rational(-1, 2))));
  CHECK_THROWS_AS(parse_argument("2x"), ParseError);
  CHECK_THROWS_AS(parse_argument("pi/0"), ParseError);
  CHECK_THROWS_AS(parse_argument("0pi"), ParseError);
  for (const auto& w : omega_set()) CHECK(parse_argument(format_argument(w)) == w);
  CHECK(format_argument(SurdGaussian(1)) == "2*pi");
  CHECK(format_argument(SurdGaussian(Rational(1, 2))) == "pi");
}
