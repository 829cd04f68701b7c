#pragma once

#include "limitless/expr/expr.hpp"

namespace limitless {

enum class SignClaim { Positive, Negative, NonNegative, NonPositive };

/// True when the claim is certified on all of x by adaptive bisection of
/// interval enclosures, at most `max_depth` levels deep. False means "not
/// certified", which includes the claim being false.
bool certify_sign(const Expr& e, const Interval& x, SignClaim claim,
                  Precision prec, int max_depth = 12);

enum class Monotone { Constant, Increasing, Decreasing, Unknown };

std::string_view monotone_name(Monotone m);

/// Monotonicity of e on x from the sign of its symbolic derivative.
/// Increasing and Decreasing are in the non-strict sense. Unknown when the
/// derivative does not exist (sgn) or its sign cannot be certified.
Monotone certify_monotone(const Expr& e, const Interval& x, Precision prec);

}  // namespace limitless
