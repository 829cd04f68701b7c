#pragma once

#include <string>
#include <string_view>

#include "limitless/control/claim.hpp"
#include "limitless/expr/sign.hpp"

namespace limitless {

enum class Fact {
  IdenticallyZero,
  IdenticallyConst,
  Positive,
  Negative,
  Increasing,
  Decreasing
};

enum class Shape {
  Constant,
  Linear,
  Increasing,
  Decreasing,
  ConvexDown,
  ConvexUp
};

std::string_view fact_name(Fact f);
std::string_view shape_name(Shape s);
/// Throws InvalidArgument for an unknown name.
Fact parse_fact(std::string_view name);

struct ShapeReport {
  Shape property;
  Fact premise;
  Interval domain;
  /// Which implication produced the property, in words.
  std::string rule;
  /// Where the control claim itself came from; "assumed" unless the caller
  /// says otherwise.
  std::string claim_basis;
  int grid_points = 0;
  int spot_checks = 0;
  /// Spot checks whose enclosures were too wide to decide either way.
  int spot_checks_undecided = 0;
};

/// Certifies `fact` about f on the claim domain, then states the matching
/// property of F and spot-checks it on `grid_n` + 1 equispaced points.
/// Convexity is checked in the non-strict midpoint form. Throws
/// PremiseNotCertified when the fact cannot be certified and
/// ConclusionRefuted when a spot check certifiably fails (the claim is then
/// false).
ShapeReport infer_shape(const ControlClaim& claim, Fact fact, Precision prec,
                        int grid_n = 64, std::string claim_basis = "assumed");

struct Approximation {
  Rational approx;
  Rational error_bound;
  /// Monotonicity of f certified on [min(base, target), max(base, target)].
  Monotone direction = Monotone::Constant;
  /// F(target) lies between F(base) + f(base)*delta and F(base) + f(target)*delta.
  Interval bracket;
};

/// F(target) ~ F(base) + f(base)*(target - base) with
/// |F(target) - approx| <= error_bound, given that f is a control function
/// of F (assumed) and monotone between base and target (certified here).
/// Throws PremiseNotCertified when monotonicity cannot be certified or
/// F(base), f(base) are not exact rationals.
Approximation approximate_with_error(const FunctionSpec& F,
                                     const FunctionSpec& f,
                                     const Rational& base,
                                     const Rational& target, Precision prec);

}  // namespace limitless
