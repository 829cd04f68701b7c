#include "limitless/expr/expr.hpp"

#include "limitless/errors.hpp"
#include "limitless/expr/eval.hpp"

namespace limitless {

struct Expr::Node {
  Op op = Op::Const;
  Rational value;
  long long exponent = 0;
  bool has_var = false;
  std::size_t size = 1;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

}  // namespace

std::string_view op_name(Op op) {
  switch (op) {
    case Op::Const: return "const";
    case Op::Var: return "var";
    case Op::Add: return "add";
    case Op::Sub: return "sub";
    case Op::Mul: return "mul";
    case Op::Div: return "div";
    case Op::Pow: return "pow";
    case Op::Sqrt: return "sqrt";
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Abs: return "abs";
    case Op::Sgn: return "sgn";
  }
  return "?";
}

Expr::Expr() : Expr(constant(Rational(0))) {}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::constant(Rational value) {
  auto n = std::make_shared<Node>();
  n->op = Op::Const;
  n->value = std::move(value);
  return Expr(std::move(n));
}

Expr Expr::var() {
  static const NodePtr x = [] {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->has_var = true;
    return n;
  }();
  return Expr(x);
}

namespace {

NodePtr make_node(Op op, NodePtr a, NodePtr b, long long exponent = 0) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->exponent = exponent;
  n->has_var = a->has_var || (b && b->has_var);
  n->size = 1 + a->size + (b ? b->size : 0);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

}  // namespace

Expr Expr::add(Expr a, Expr b) {
  return Expr(make_node(Op::Add, std::move(a.node_), std::move(b.node_)));
}
Expr Expr::sub(Expr a, Expr b) {
  return Expr(make_node(Op::Sub, std::move(a.node_), std::move(b.node_)));
}
Expr Expr::mul(Expr a, Expr b) {
  return Expr(make_node(Op::Mul, std::move(a.node_), std::move(b.node_)));
}
Expr Expr::div(Expr a, Expr b) {
  return Expr(make_node(Op::Div, std::move(a.node_), std::move(b.node_)));
}
Expr Expr::pow(Expr base, long long exponent) {
  return Expr(make_node(Op::Pow, std::move(base.node_), nullptr, exponent));
}
Expr Expr::sqrt(Expr arg) {
  return Expr(make_node(Op::Sqrt, std::move(arg.node_), nullptr));
}
Expr Expr::sin(Expr arg) {
  return Expr(make_node(Op::Sin, std::move(arg.node_), nullptr));
}
Expr Expr::cos(Expr arg) {
  return Expr(make_node(Op::Cos, std::move(arg.node_), nullptr));
}
Expr Expr::abs(Expr arg) {
  return Expr(make_node(Op::Abs, std::move(arg.node_), nullptr));
}
Expr Expr::sgn(Expr arg) {
  return Expr(make_node(Op::Sgn, std::move(arg.node_), nullptr));
}

Op Expr::op() const { return node_->op; }

const Rational& Expr::value() const { return node_->value; }

long long Expr::exponent() const { return node_->exponent; }

Expr Expr::lhs() const { return Expr(node_->a); }

Expr Expr::rhs() const { return Expr(node_->b); }

bool Expr::has_var() const { return node_->has_var; }

bool Expr::is_negation() const {
  return op() == Op::Sub && node_->a->op == Op::Const &&
         node_->a->value.is_zero() && node_->b->op != Op::Const;
}

std::size_t Expr::size() const { return node_->size; }

namespace {

bool equal(const Expr::Node* a, const Expr::Node* b) {
  if (a == b) return true;
  if (a == nullptr || b == nullptr) return false;
  if (a->op != b->op || a->size != b->size) return false;
  switch (a->op) {
    case Op::Const: return a->value == b->value;
    case Op::Var: return true;
    case Op::Pow:
      return a->exponent == b->exponent && equal(a->a.get(), b->a.get());
    default:
      return equal(a->a.get(), b->a.get()) && equal(a->b.get(), b->b.get());
  }
}

void validate(const Expr& body, const Interval& piece, Precision prec,
              int depth) {
  try {
    (void)eval_enclosure(body, piece, prec);
  } catch (const EvalDomainError&) {
    if (depth == 0 || piece.is_point()) {
      throw EvalDomainError("expression is not defined on all of " +
                            piece.to_string() +
                            " (pole or sqrt of a negative)");
    }
    const Rational m = piece.mid();
    validate(body, Interval(piece.lo(), m), prec, depth - 1);
    validate(body, Interval(m, piece.hi()), prec, depth - 1);
  }
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  return equal(a.node_.get(), b.node_.get());
}

FunctionSpec::FunctionSpec(Expr body, Interval domain, Precision prec)
    : body_(std::move(body)), domain_(std::move(domain)) {
  constexpr int kValidationDepth = 16;
  validate(body_, domain_, prec, kValidationDepth);
}

}  // namespace limitless
