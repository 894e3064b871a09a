#pragma once

#include <utility>

#include "zforge/exact/rational.hpp"

namespace zforge::identities {

using exact::Rational;

// With b_n = B_n / n!; all require m >= 1.

/// sum_{j=0}^{2m+1} (-1)^j b_{4m-2j+2} b_{2j}; vanishes.
Rational cor5(long m);
/// sum_{j=0}^{m} (-4)^j [b_{4m-4j+2} b_{4j} + 2 b_{4m-4j} b_{4j+2}]; vanishes.
Rational thm10(long m);
/// (sum_{k=0}^{2m} (-1)^k b_{4m-2k} b_{2k},
///  sum_{j=0}^{m} (-4)^j b_{4m-4j} b_{4j} - 2 sum_{j=0}^{m-1} (-4)^j b_{4m-4j-2} b_{4j+2}); equal.
std::pair<Rational, Rational> thm11(long m);

}  // namespace zforge::identities
