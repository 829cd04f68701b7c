#pragma once

#include "limitless/numeric/interval.hpp"

namespace limitless {

/// Outward enclosure of {sqrt(t) : t in x}. Endpoints are multiples of
/// 2^-bits, so a point argument yields width <= 2^-bits; perfect squares of
/// dyadic rationals come back exact.
///
/// Throws DomainError when x.lo() < 0.
Interval sqrt_enclosure(const Interval& x, Precision prec);

enum class Trig { Sin, Cos };

/// Outward enclosure of the range of sin or cos over x, always inside
/// [-1, 1]. Point arguments yield width <= 2^-(bits - 1).
Interval sincos_enclosure(const Interval& x, Trig fn, Precision prec);

/// Enclosure of pi with width <= 2^-bits (Machin's formula with alternating
/// series remainders). Cached per bit count; safe to call concurrently.
Interval pi_enclosure(int bits);

}  // namespace limitless
