#pragma once

#include <string>
#include <string_view>

#include "limitless/expr/expr.hpp"

namespace limitless {

/// Parses the expression grammar
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/' | '÷') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' exponent)?
///   exponent:= '-'? INT | '(' '-'? INT ')'
///   primary := NUMBER | INT '/' INT | 'x' | FUNC '(' expr ')' | '(' expr ')'
///   FUNC    := sqrt | sin | cos | abs | sgn
///
/// `^` binds tighter than unary minus, so -x^2 is -(x^2). A written fraction
/// `p/q` with no whitespace becomes a single constant unless it follows `/`
/// or `^` or is itself raised to a power. Unary minus folds into constants and
/// otherwise becomes Sub(0, e).
///
/// Throws ParseError carrying the byte offset and the expected tokens.
Expr parse(std::string_view text);

/// Canonical text form; parse(format(e)) == e for every tree.
std::string format(const Expr& e);

}  // namespace limitless
