#pragma once

#include <optional>

#include "limitless/expr/expr.hpp"
#include "limitless/numeric/interval.hpp"

namespace limitless {

/// Exact value at x when no irrational intermediate occurs; empty
/// (NotExact) otherwise. Throws EvalDomainError at a pole or for sqrt of a
/// negative.
std::optional<Rational> eval_exact(const Expr& e, const Rational& x);

/// Enclosure of the range of e over x. sgn over an interval straddling 0 is
/// [-1, 1]. Throws EvalDomainError when a divisor enclosure contains 0 or a
/// sqrt argument enclosure dips below 0.
Interval eval_enclosure(const Expr& e, const Interval& x, Precision prec);

/// The exact value as a point interval when available, otherwise the
/// enclosure over [x, x].
Interval eval_point(const Expr& e, const Rational& x, Precision prec);

/// Hull of eval_enclosure over `pieces` equal subintervals of x; tighter
/// than a single evaluation when the tree has repeated occurrences of x.
Interval range_enclosure(const Expr& e, const Interval& x, Precision prec,
                         int pieces);

}  // namespace limitless
