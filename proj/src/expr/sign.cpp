#include "limitless/expr/sign.hpp"

#include "limitless/errors.hpp"
#include "limitless/expr/derivative.hpp"
#include "limitless/expr/eval.hpp"

namespace limitless {

namespace {

bool holds(const Interval& v, SignClaim claim) {
  switch (claim) {
    case SignClaim::Positive: return v.lo().sign() > 0;
    case SignClaim::Negative: return v.hi().sign() < 0;
    case SignClaim::NonNegative: return v.lo().sign() >= 0;
    case SignClaim::NonPositive: return v.hi().sign() <= 0;
  }
  return false;
}

// The value certainly violates the claim.
bool fails(const Interval& v, SignClaim claim) {
  switch (claim) {
    case SignClaim::Positive: return v.hi().sign() <= 0;
    case SignClaim::Negative: return v.lo().sign() >= 0;
    case SignClaim::NonNegative: return v.hi().sign() < 0;
    case SignClaim::NonPositive: return v.lo().sign() > 0;
  }
  return true;
}

bool certify(const Expr& e, const Interval& x, SignClaim claim, Precision prec,
             int depth) {
  try {
    if (holds(eval_enclosure(e, x, prec), claim)) return true;
  } catch (const EvalDomainError&) {
    if (x.is_point()) return false;
  }
  if (depth == 0 || x.is_point()) return false;
  const Rational m = x.mid();
  try {
    if (fails(eval_point(e, m, prec), claim)) return false;
  } catch (const EvalDomainError&) {
    return false;
  }
  return certify(e, Interval(x.lo(), m), claim, prec, depth - 1) &&
         certify(e, Interval(m, x.hi()), claim, prec, depth - 1);
}

}  // namespace

bool certify_sign(const Expr& e, const Interval& x, SignClaim claim,
                  Precision prec, int max_depth) {
  for (const Rational& end : {x.lo(), x.hi()}) {
    try {
      if (fails(eval_point(e, end, prec), claim)) return false;
    } catch (const EvalDomainError&) {
      return false;
    }
  }
  return certify(e, x, claim, prec, max_depth);
}

std::string_view monotone_name(Monotone m) {
  switch (m) {
    case Monotone::Constant: return "constant";
    case Monotone::Increasing: return "increasing";
    case Monotone::Decreasing: return "decreasing";
    case Monotone::Unknown: return "unknown";
  }
  return "unknown";
}

Monotone certify_monotone(const Expr& e, const Interval& x, Precision prec) {
  if (!e.has_var()) return Monotone::Constant;
  const std::optional<Expr> d = symbolic_derivative(e);
  if (!d) return Monotone::Unknown;
  if (d->is_const(0)) return Monotone::Constant;
  if (certify_sign(*d, x, SignClaim::NonNegative, prec)) {
    return Monotone::Increasing;
  }
  if (certify_sign(*d, x, SignClaim::NonPositive, prec)) {
    return Monotone::Decreasing;
  }
  return Monotone::Unknown;
}

}  // namespace limitless
