#include "limitless/expr/eval.hpp"

#include "limitless/errors.hpp"
#include "limitless/numeric/enclosure.hpp"

namespace limitless {

namespace {

using Exact = std::optional<Rational>;

// Precision used to decide the sign of an irrational sgn argument.
const Precision kSignPrecision(64);

Interval sgn_range(const Interval& a) {
  const int lo = a.lo().sign();
  const int hi = a.hi().sign();
  return Interval(Rational(lo), Rational(hi));
}

}  // namespace

std::optional<Rational> eval_exact(const Expr& e, const Rational& x) {
  switch (e.op()) {
    case Op::Const:
      return e.value();
    case Op::Var:
      return x;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
      const Exact a = eval_exact(e.lhs(), x);
      const Exact b = eval_exact(e.rhs(), x);
      if (e.op() == Op::Div && b && b->is_zero()) {
        throw EvalDomainError("division by zero at x = " + x.to_string());
      }
      if (!a || !b) return std::nullopt;
      switch (e.op()) {
        case Op::Add: return *a + *b;
        case Op::Sub: return *a - *b;
        case Op::Mul: return *a * *b;
        default: return *a / *b;
      }
    }
    case Op::Pow: {
      const Exact base = eval_exact(e.lhs(), x);
      if (base && base->is_zero() && e.exponent() < 0) {
        throw EvalDomainError("negative power of zero at x = " + x.to_string());
      }
      if (e.exponent() == 0) {
        // Still has to be defined here; an inexact base is checked by
        // enclosure, which throws when it cannot be.
        if (!base) (void)eval_enclosure(e.lhs(), Interval(x), kSignPrecision);
        return Rational(1);
      }
      if (!base) return std::nullopt;
      return base->pow(e.exponent());
    }
    case Op::Sqrt: {
      const Exact arg = eval_exact(e.lhs(), x);
      if (!arg) return std::nullopt;
      if (arg->sign() < 0) {
        throw EvalDomainError("sqrt of negative value at x = " + x.to_string());
      }
      return arg->exact_sqrt();
    }
    case Op::Sin:
    case Op::Cos: {
      const Exact arg = eval_exact(e.lhs(), x);
      if (!arg || !arg->is_zero()) return std::nullopt;
      return Rational(e.op() == Op::Sin ? 0 : 1);
    }
    case Op::Abs: {
      const Exact arg = eval_exact(e.lhs(), x);
      if (!arg) return std::nullopt;
      return arg->abs();
    }
    case Op::Sgn: {
      const Exact arg = eval_exact(e.lhs(), x);
      if (arg) return Rational(arg->sign());
      // An irrational argument is nonzero, so a sign-definite enclosure
      // settles it exactly.
      const Interval enc = eval_enclosure(e.lhs(), Interval(x), kSignPrecision);
      if (enc.certainly_positive()) return Rational(1);
      if (enc.certainly_negative()) return Rational(-1);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Interval eval_enclosure(const Expr& e, const Interval& x, Precision prec) {
  switch (e.op()) {
    case Op::Const:
      return Interval(e.value());
    case Op::Var:
      return x;
    case Op::Add:
      return eval_enclosure(e.lhs(), x, prec) + eval_enclosure(e.rhs(), x, prec);
    case Op::Sub:
      return eval_enclosure(e.lhs(), x, prec) - eval_enclosure(e.rhs(), x, prec);
    case Op::Mul:
      return eval_enclosure(e.lhs(), x, prec) * eval_enclosure(e.rhs(), x, prec);
    case Op::Div: {
      const Interval num = eval_enclosure(e.lhs(), x, prec);
      const Interval den = eval_enclosure(e.rhs(), x, prec);
      if (den.contains_zero()) {
        throw EvalDomainError("divisor may vanish on " + x.to_string());
      }
      return num / den;
    }
    case Op::Pow: {
      const Interval base = eval_enclosure(e.lhs(), x, prec);
      if (e.exponent() < 0 && base.contains_zero()) {
        throw EvalDomainError("negative power of a value that may vanish on " +
                              x.to_string());
      }
      return base.pow(e.exponent());
    }
    case Op::Sqrt: {
      const Interval arg = eval_enclosure(e.lhs(), x, prec);
      if (arg.lo().sign() < 0) {
        throw EvalDomainError("sqrt argument may be negative on " +
                              x.to_string());
      }
      if (arg.is_point()) {
        if (auto root = arg.lo().exact_sqrt()) return Interval(*root);
      }
      return sqrt_enclosure(arg, prec);
    }
    case Op::Sin:
      return sincos_enclosure(eval_enclosure(e.lhs(), x, prec), Trig::Sin, prec);
    case Op::Cos:
      return sincos_enclosure(eval_enclosure(e.lhs(), x, prec), Trig::Cos, prec);
    case Op::Abs:
      return eval_enclosure(e.lhs(), x, prec).abs();
    case Op::Sgn:
      return sgn_range(eval_enclosure(e.lhs(), x, prec));
  }
  return x;
}

Interval eval_point(const Expr& e, const Rational& x, Precision prec) {
  if (auto exact = eval_exact(e, x)) return Interval(*exact);
  return eval_enclosure(e, Interval(x), prec);
}

Interval range_enclosure(const Expr& e, const Interval& x, Precision prec,
                         int pieces) {
  if (pieces <= 1 || x.is_point()) return eval_enclosure(e, x, prec);
  const Rational step = x.width() / Rational(pieces);
  std::optional<Interval> hull;
  for (int i = 0; i < pieces; ++i) {
    const Rational a = x.lo() + step * Rational(i);
    const Rational b = i + 1 == pieces ? x.hi() : a + step;
    const Interval piece = eval_enclosure(e, Interval(a, b), prec);
    hull = hull ? hull->hull_with(piece) : piece;
  }
  return *hull;
}

}  // namespace limitless
