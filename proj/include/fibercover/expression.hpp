#pragma once

#include <string_view>

#include "fibercover/monodromy.hpp"

namespace fibercover {

// Rational function of one variable with exact coefficients.
//
//   expr    := term { ("+" | "-") term }
//   term    := factor { ["*" | "/"] factor }     (juxtaposition multiplies)
//   factor  := ("+" | "-") factor | power
//   power   := primary [ "^" ["-"] integer ]
//   primary := number | "i" | variable | "(" expr ")"
//
// Numbers are integers or decimals; "i" is the imaginary unit; the variable is
// any other single letter and must be the same throughout. Throws
// Error(syntax) with the 1-based column of the offending character, or
// Error(invalid_argument) for a constant result.
RationalMap parse_rational_map(std::string_view text);

}  // namespace fibercover
