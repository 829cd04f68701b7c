#pragma once

#include "limitless/control/claim.hpp"

namespace limitless {

/// Certificate that g(x) = 3x^2 + 2ax + b controls F(x) = x^3 + ax^2 + bx + c
/// on every interval. With D the difference quotient over [u, v]:
///
///   D - g(u) = (v - u)(v + 2u + a)      g(v) - D = (v - u)(2v + u + a)
///
/// and both right factors are positive for v > u >= -a/3 and negative for
/// u < v <= -a/3, so the endpoints bracket D on each side of the split and
/// the two halves glue. Every identity is verified by expanding both sides
/// as polynomials in (u, v). Throws std::logic_error if one fails, which
/// would be a bug in the algebra code rather than a property of (a, b, c).
Verdict cubic_control_certificate(const Rational& a, const Rational& b,
                                  const Rational& c, const Interval& window);

/// The claim (F, g) on `window`, glued from the pieces left and right of
/// -a/3 when that point is interior.
ControlClaim cubic_claim(const Rational& a, const Rational& b,
                         const Rational& c, const Interval& window);

}  // namespace limitless
