#pragma once

#include <string>

#include "zforge/identities/identity.hpp"

namespace zforge::identities {

enum class Format { Text, Json };

/// "S[3](2*pi)", "T[5](pi*(1-i))", "ODD_APOSTOL[-5](pi)".
std::string term_text(const SumTerm& term);

/// Text solves for the highest zeta atom, else a lone pi power, else puts
/// the sums on the left:
///   "zeta(3) = (7/180)*pi^3 - 2*S[3](2*pi)"
///   "S[1](2*pi) + T[1](2*pi) = (1/6)*pi - (3/4)*log2"
std::string emit(const Identity& id, Format format);

/// Inverse of emit(Json). ParseError on malformed input.
Identity parse_identity_json(const std::string& text);

}  // namespace zforge::identities
