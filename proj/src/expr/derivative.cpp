#include "limitless/expr/derivative.hpp"

namespace limitless {

namespace {

Expr num(long long v) { return Expr::constant(Rational(v)); }

Expr add(Expr a, Expr b) {
  if (a.is_const(0)) return b;
  if (b.is_const(0)) return a;
  if (a.is_const() && b.is_const()) return Expr::constant(a.value() + b.value());
  return Expr::add(std::move(a), std::move(b));
}

Expr neg(Expr a) {
  if (a.is_const()) return Expr::constant(-a.value());
  if (a.is_negation()) return a.rhs();
  return Expr::sub(Expr(), std::move(a));
}

Expr sub(Expr a, Expr b) {
  if (b.is_const(0)) return a;
  if (a.is_const(0)) return neg(std::move(b));
  if (a.is_const() && b.is_const()) return Expr::constant(a.value() - b.value());
  return Expr::sub(std::move(a), std::move(b));
}

Expr mul(Expr a, Expr b) {
  if (a.is_const(0) || b.is_const(0)) return num(0);
  if (a.is_const(1)) return b;
  if (b.is_const(1)) return a;
  if (a.is_const() && b.is_const()) return Expr::constant(a.value() * b.value());
  if (a.is_const(-1)) return neg(std::move(b));
  if (b.is_const(-1)) return neg(std::move(a));
  return Expr::mul(std::move(a), std::move(b));
}

Expr div(Expr a, Expr b) {
  if (a.is_const(0)) return num(0);
  if (b.is_const(1)) return a;
  return Expr::div(std::move(a), std::move(b));
}

Expr pow(Expr base, long long n) {
  if (n == 1) return base;
  if (n == 0) return num(1);
  return Expr::pow(std::move(base), n);
}

}  // namespace

std::optional<Expr> symbolic_derivative(const Expr& e) {
  if (!e.has_var()) return num(0);
  switch (e.op()) {
    case Op::Const:
      return num(0);
    case Op::Var:
      return num(1);
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
      const auto da = symbolic_derivative(e.lhs());
      const auto db = symbolic_derivative(e.rhs());
      if (!da || !db) return std::nullopt;
      const Expr a = e.lhs();
      const Expr b = e.rhs();
      switch (e.op()) {
        case Op::Add: return add(*da, *db);
        case Op::Sub: return sub(*da, *db);
        case Op::Mul: return add(mul(*da, b), mul(a, *db));
        default:
          if (!b.has_var()) return div(*da, b);
          return div(sub(mul(*da, b), mul(a, *db)), pow(b, 2));
      }
    }
    case Op::Pow: {
      const auto da = symbolic_derivative(e.lhs());
      if (!da) return std::nullopt;
      const long long n = e.exponent();
      return mul(mul(num(n), pow(e.lhs(), n - 1)), *da);
    }
    case Op::Sqrt: {
      const auto da = symbolic_derivative(e.lhs());
      if (!da) return std::nullopt;
      return div(*da, Expr::mul(num(2), e));
    }
    case Op::Sin: {
      const auto da = symbolic_derivative(e.lhs());
      if (!da) return std::nullopt;
      return mul(Expr::cos(e.lhs()), *da);
    }
    case Op::Cos: {
      const auto da = symbolic_derivative(e.lhs());
      if (!da) return std::nullopt;
      return mul(neg(Expr::sin(e.lhs())), *da);
    }
    case Op::Abs: {
      const auto da = symbolic_derivative(e.lhs());
      if (!da) return std::nullopt;
      return mul(Expr::sgn(e.lhs()), *da);
    }
    case Op::Sgn:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace limitless
