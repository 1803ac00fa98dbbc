#pragma once

#include <string_view>
#include <vector>

#include "dlang/mpoly.hpp"
#include "dlang/twisted.hpp"

namespace dlang {

// Expression syntax shared by every ring:
//
//   expr   := ['+' | '-'] term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary | unary)*     juxtaposition multiplies
//   unary  := '-' unary | power
//   power  := atom ['^' ['-'] INT]
//   atom   := INT | NAME | '(' expr ')'
//
// Names: `t`, `g` (the fixed primitive element of F_q), `tau`, `X1` / `X_1`,
// and `x` inside a conductor. Errors are ParseError with the line and column
// of the offending token; `line` and `column` give the position of text[0].

std::vector<int> parse_conductor(int p, std::string_view text, int line = 1, int column = 1);
RatFunc parse_ratfunc(const FieldPtr& f, std::string_view text, int line = 1, int column = 1);
/// Multiplication is composition in K{tau}; only scalars may be divided.
TwistedPoly parse_twisted(const FieldPtr& f, std::string_view text, int line = 1, int column = 1);
/// Polynomial in X_1..X_g; division only by constants.
MPoly parse_mpoly(const FieldPtr& f, int g, std::string_view text, int line = 1, int column = 1);

}  // namespace dlang
