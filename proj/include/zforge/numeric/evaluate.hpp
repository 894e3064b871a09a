#pragma once

#include "zforge/numeric/complex.hpp"
#include "zforge/numeric/context.hpp"
#include "zforge/symbolic/value.hpp"

namespace zforge::numeric {

/// (re + i im) * sqrt(d) at working precision.
Complex to_complex(const symbolic::SurdGaussian& v, mpfr_prec_t bits);

/// Numeric value of pi^j * base.
Complex eval_atom(const symbolic::BasisAtom& atom, const PrecisionContext& ctx);

/// Sum of coefficient * atom over all terms; zero for the empty value.
Complex eval_symbolic(const symbolic::SymbolicValue& v, const PrecisionContext& ctx);

}  // namespace zforge::numeric
