#pragma once

#include <optional>

#include "limitless/expr/expr.hpp"

namespace limitless {

/// Symbolic derivative with light constant folding (0 and 1 identities,
/// constant subtrees collapse to 0). abs(e) differentiates to sgn(e)*e'.
/// Empty when the tree contains sgn of a non-constant argument.
std::optional<Expr> symbolic_derivative(const Expr& e);

}  // namespace limitless
