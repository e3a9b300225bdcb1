#pragma once

#include <string>
#include <string_view>

#include "fibercover/cover.hpp"
#include "fibercover/monodromy.hpp"

namespace fibercover {

// Cover file, version 1. Line oriented; '#' starts a comment.
//
//   version 1
//   base_genus <int>
//   degree <int>
//   handle <cycles> ; <cycles>      base_genus times, in order
//   branch <label> <cycles> [pad]   in relation order
//
// Syntax errors are Error(syntax) (or the cycle-grammar kinds) with a message
// starting "line L, column C:". No semantic checks.
BranchedCover parse_cover_text(std::string_view text);

// parse_cover_text followed by validate; a failing cover raises
// Error(validation) whose message lists the issues, including the relation
// residual.
BranchedCover parse_cover_file(std::string_view text);

std::string emit_cover_file(const BranchedCover& cover);

// Map file, version 1: either
//   numerator <c0> <c1> ...       ascending coefficients in Q(i)
//   denominator <c0> <c1> ...     optional, default 1
// or
//   expr <expression>
RationalMap parse_map_file(std::string_view text);
std::string emit_map_file(const RationalMap& f);

// A map argument: a map file when the text starts with a keyword of the map
// grammar, an expression otherwise.
RationalMap parse_map_argument(std::string_view text);

// Whole file, or standard input for "-". Throws Error(io).
std::string read_input(const std::string& path);

}  // namespace fibercover
