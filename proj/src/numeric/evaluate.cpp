#include "zforge/numeric/evaluate.hpp"

#include "zforge/numeric/special.hpp"

namespace zforge::numeric {

using symbolic::BasisAtom;

Complex to_complex(const symbolic::SurdGaussian& v, mpfr_prec_t bits) {
  Complex out(Real::from_rational(v.coefficient().re, bits), Real::from_rational(v.coefficient().im, bits));
  if (v.surd() != 1) out *= sqrt(Real::from_long(static_cast<long>(v.surd()), bits));
  return out;
}

Complex eval_atom(const BasisAtom& atom, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  Real value = pow(Real::pi(bits), atom.pi_power());
  switch (atom.base()) {
    case BasisAtom::Base::One:
      break;
    case BasisAtom::Base::Zeta:
      value *= zeta_real(atom.zeta_index(), ctx);
      break;
    case BasisAtom::Base::Log2:
      value *= Real::ln2(bits);
      break;
  }
  return Complex(value);
}

Complex eval_symbolic(const symbolic::SymbolicValue& v, const PrecisionContext& ctx) {
  const PrecisionContext inner = ctx.widened(5);
  Complex total(inner.bits());
  for (const auto& term : v.terms()) total += to_complex(term.coefficient, inner.bits()) * eval_atom(term.atom, inner);
  return Complex(total.re().with_precision(ctx.bits()), total.im().with_precision(ctx.bits()));
}

}  // namespace zforge::numeric
