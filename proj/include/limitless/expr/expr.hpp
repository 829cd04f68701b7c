#pragma once

#include <memory>
#include <string_view>

#include "limitless/numeric/interval.hpp"
#include "limitless/numeric/rational.hpp"

namespace limitless {

enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Sqrt, Sin, Cos, Abs, Sgn };

std::string_view op_name(Op op);

/// Immutable expression tree over the single variable x. Copies share
/// structure; equality is structural.
class Expr {
 public:
  /// The constant 0.
  Expr();

  static Expr constant(Rational value);
  static Expr var();
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr div(Expr a, Expr b);
  static Expr pow(Expr base, long long exponent);
  static Expr sqrt(Expr arg);
  static Expr sin(Expr arg);
  static Expr cos(Expr arg);
  static Expr abs(Expr arg);
  static Expr sgn(Expr arg);

  Op op() const;
  /// Only for Op::Const.
  const Rational& value() const;
  /// Only for Op::Pow.
  long long exponent() const;
  /// Left operand for binary nodes, sole operand for unary ones.
  Expr lhs() const;
  /// Right operand of binary nodes.
  Expr rhs() const;

  bool is_const() const { return op() == Op::Const; }
  bool is_const(long long v) const {
    return is_const() && value() == Rational(v);
  }
  /// False when the tree mentions no x at all.
  bool has_var() const;
  /// Sub(0, e) with non-constant e: how unary minus is represented.
  bool is_negation() const;
  /// Number of nodes.
  std::size_t size() const;

  friend bool operator==(const Expr& a, const Expr& b);

  struct Node;  // opaque outside expr.cpp

 private:
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// A function body together with the interval it is claimed on.
class FunctionSpec {
 public:
  /// Throws EvalDomainError when `body` cannot be evaluated on all of
  /// `domain` (a pole of a division or negative power, or sqrt of a
  /// negative). Removable trouble from interval overestimation is resolved by
  /// bisection before giving up.
  FunctionSpec(Expr body, Interval domain, Precision prec = Precision(64));

  const Expr& body() const { return body_; }
  const Interval& domain() const { return domain_; }

 private:
  Expr body_;
  Interval domain_;
};

}  // namespace limitless
