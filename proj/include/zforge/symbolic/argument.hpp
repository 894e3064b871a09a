#pragma once

#include <string>
#include <string_view>

#include "zforge/symbolic/gaussian.hpp"

namespace zforge::symbolic {

/// Parses an exact series argument x and returns omega = x / (2 pi).
///
/// Grammar (whitespace ignored):
///   [coef ["*"]] "pi" ["*sqrt(" d ")"] ["/" q] ["*(" a ("+"|"-") [b] "i)"]
/// coef and q are integers, a and b are rationals. Examples: "pi", "2pi",
/// "2*pi", "pi*sqrt(3)", "2pi/3", "2pi*(1+i)", "pi*(1-i)".
SurdGaussian parse_argument(std::string_view text);

/// Inverse of parse_argument for display: omega = 1 -> "2*pi".
std::string format_argument(const SurdGaussian& omega);

}  // namespace zforge::symbolic
