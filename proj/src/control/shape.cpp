#include "limitless/control/shape.hpp"

#include <vector>

#include "limitless/errors.hpp"
#include "limitless/expr/derivative.hpp"
#include "limitless/expr/eval.hpp"

namespace limitless {

std::string_view fact_name(Fact f) {
  switch (f) {
    case Fact::IdenticallyZero: return "identically-zero";
    case Fact::IdenticallyConst: return "identically-const";
    case Fact::Positive: return "positive";
    case Fact::Negative: return "negative";
    case Fact::Increasing: return "increasing";
    case Fact::Decreasing: return "decreasing";
  }
  return "?";
}

std::string_view shape_name(Shape s) {
  switch (s) {
    case Shape::Constant: return "constant";
    case Shape::Linear: return "linear";
    case Shape::Increasing: return "increasing";
    case Shape::Decreasing: return "decreasing";
    case Shape::ConvexDown: return "convex-down";
    case Shape::ConvexUp: return "convex-up";
  }
  return "?";
}

Fact parse_fact(std::string_view name) {
  for (Fact f : {Fact::IdenticallyZero, Fact::IdenticallyConst, Fact::Positive,
                 Fact::Negative, Fact::Increasing, Fact::Decreasing}) {
    if (fact_name(f) == name) return f;
  }
  throw InvalidArgument("unknown fact '" + std::string(name) +
                        "' (identically-zero, identically-const, positive, "
                        "negative, increasing, decreasing)");
}

namespace {

bool premise_holds(const Expr& f, const Interval& q, Fact fact,
                   Precision prec) {
  switch (fact) {
    case Fact::IdenticallyZero:
      return certify_sign(f, q, SignClaim::NonNegative, prec) &&
             certify_sign(f, q, SignClaim::NonPositive, prec);
    case Fact::IdenticallyConst: {
      if (!f.has_var()) return true;
      const auto d = symbolic_derivative(f);
      return d && certify_sign(*d, q, SignClaim::NonNegative, prec) &&
             certify_sign(*d, q, SignClaim::NonPositive, prec);
    }
    case Fact::Positive:
      return certify_sign(f, q, SignClaim::Positive, prec);
    case Fact::Negative:
      return certify_sign(f, q, SignClaim::Negative, prec);
    case Fact::Increasing: {
      const Monotone m = certify_monotone(f, q, prec);
      return m == Monotone::Increasing || m == Monotone::Constant;
    }
    case Fact::Decreasing: {
      const Monotone m = certify_monotone(f, q, prec);
      return m == Monotone::Decreasing || m == Monotone::Constant;
    }
  }
  return false;
}

struct Conclusion {
  Shape shape;
  const char* rule;
};

Conclusion conclusion_for(Fact fact) {
  switch (fact) {
    case Fact::IdenticallyZero:
      return {Shape::Constant, "f = 0 on Q, so F is constant on Q"};
    case Fact::IdenticallyConst:
      return {Shape::Linear, "f = C on Q, so F is linear on Q"};
    case Fact::Positive:
      return {Shape::Increasing, "f > 0 on Q, so F is increasing on Q"};
    case Fact::Negative:
      return {Shape::Decreasing, "f < 0 on Q, so F is decreasing on Q"};
    case Fact::Increasing:
      return {Shape::ConvexDown,
              "f increasing on Q, so F is convex down on Q (midpoint "
              "inequality)"};
    case Fact::Decreasing:
      return {Shape::ConvexUp,
              "f decreasing on Q, so F is convex up on Q (midpoint "
              "inequality)"};
  }
  return {Shape::Constant, ""};
}

enum class Check { Pass, Fail, Undecided };

// Sign test on an enclosure: Pass when certainly >= 0 (or > 0 if strict),
// Fail when certainly on the wrong side.
Check at_least_zero(const Interval& v, bool strict) {
  if (strict ? v.lo().sign() > 0 : v.lo().sign() >= 0) return Check::Pass;
  if (strict ? v.hi().sign() <= 0 : v.hi().sign() < 0) return Check::Fail;
  return Check::Undecided;
}

Check is_zero(const Interval& v) {
  if (v.is_point() && v.lo().is_zero()) return Check::Pass;
  if (!v.contains_zero()) return Check::Fail;
  return Check::Undecided;
}

}  // namespace

ShapeReport infer_shape(const ControlClaim& claim, Fact fact, Precision prec,
                        int grid_n, std::string claim_basis) {
  if (grid_n < 2) throw InvalidArgument("shape grid needs at least 2 cells");
  const Interval& q = claim.domain();
  if (!premise_holds(claim.control().body(), q, fact, prec)) {
    throw PremiseNotCertified("could not certify that f is " +
                              std::string(fact_name(fact)) + " on " +
                              q.to_string());
  }
  const Conclusion c = conclusion_for(fact);
  ShapeReport report{c.shape, fact, q, c.rule, std::move(claim_basis),
                     grid_n + 1, 0, 0};
  if (q.is_point()) return report;

  std::vector<Interval> values;
  values.reserve(grid_n + 1);
  for (int i = 0; i <= grid_n; ++i) {
    const Rational x = q.lo() + q.width() * Rational(i, grid_n);
    values.push_back(eval_point(claim.controlled().body(), x, prec));
  }

  auto record = [&](Check result, int at) {
    ++report.spot_checks;
    if (result == Check::Undecided) ++report.spot_checks_undecided;
    if (result == Check::Fail) {
      throw ConclusionRefuted(
          "F is not " + std::string(shape_name(c.shape)) + " near x = " +
          (q.lo() + q.width() * Rational(at, grid_n)).to_string() +
          ", so f cannot control F there");
    }
  };

  const Interval half(Rational(1, 2));
  for (int i = 0; i < grid_n; ++i) {
    const Interval step = values[i + 1] - values[i];
    switch (c.shape) {
      case Shape::Constant: record(is_zero(step), i); break;
      case Shape::Increasing: record(at_least_zero(step, true), i); break;
      case Shape::Decreasing: record(at_least_zero(-step, true), i); break;
      default: break;
    }
    if (i + 2 > grid_n) continue;
    const Interval mid_gap = (values[i] + values[i + 2]) * half - values[i + 1];
    switch (c.shape) {
      case Shape::Linear: record(is_zero(mid_gap), i + 1); break;
      case Shape::ConvexDown: record(at_least_zero(mid_gap, false), i + 1); break;
      case Shape::ConvexUp: record(at_least_zero(-mid_gap, false), i + 1); break;
      default: break;
    }
  }
  if (grid_n % 2 == 0 &&
      (c.shape == Shape::ConvexDown || c.shape == Shape::ConvexUp)) {
    const Interval gap =
        (values.front() + values.back()) * half - values[grid_n / 2];
    record(at_least_zero(c.shape == Shape::ConvexDown ? gap : -gap, false),
           grid_n / 2);
  }
  return report;
}

Approximation approximate_with_error(const FunctionSpec& F,
                                     const FunctionSpec& f,
                                     const Rational& base,
                                     const Rational& target, Precision prec) {
  for (const Rational& t : {base, target}) {
    if (!F.domain().contains(t) || !f.domain().contains(t)) {
      throw InvalidArgument(t.to_string() + " is outside the function domains");
    }
  }
  const auto F_base = eval_exact(F.body(), base);
  if (!F_base) {
    throw PremiseNotCertified("F(" + base.to_string() +
                              ") is not an exact rational");
  }
  if (base == target) {
    return Approximation{*F_base, Rational(0), Monotone::Constant,
                         Interval(*F_base)};
  }
  const Interval span = Interval::hull(base, target);
  const Monotone direction = certify_monotone(f.body(), span, prec);
  if (direction == Monotone::Unknown) {
    throw PremiseNotCertified("could not certify that f is monotone on " +
                              span.to_string());
  }
  const auto f_base = eval_exact(f.body(), base);
  if (!f_base) {
    throw PremiseNotCertified("f(" + base.to_string() +
                              ") is not an exact rational");
  }
  const Rational delta = target - base;
  const Interval f_target = eval_point(f.body(), target, prec);
  // The quotient lies between f(p) and f(q) for some p, q in the span, and
  // monotone f keeps all its values there between f(base) and f(target).
  const Interval slopes = f_target.hull_with(Interval(*f_base));
  Approximation out;
  out.approx = *F_base + *f_base * delta;
  out.error_bound = (f_target - Interval(*f_base)).mag() * delta.abs();
  out.direction = direction;
  out.bracket = slopes * Interval(delta) + Interval(*F_base);
  return out;
}

}  // namespace limitless
