#pragma once

#include <optional>
#include <vector>

#include "limitless/control/verdict.hpp"
#include "limitless/expr/expr.hpp"

namespace limitless {

/// Certified range of f on one cell [a, b].
struct Cell {
  Rational a;
  Rational b;
  Interval range;
};

/// [lo, hi] contains S(u, v) for every integral system S of f.
struct IntegralEnclosure {
  Rational u;
  Rational v;
  Rational lo;
  Rational hi;
  long long n = 0;
  /// M (v - u)^2 / n when a Lipschitz constant M was supplied.
  std::optional<Rational> width_bound;
  /// Cell ranges came from endpoint values of a certified monotone f.
  bool monotone = false;
  std::vector<Cell> cells;

  Interval value() const { return Interval(lo, hi); }
  Rational width() const { return hi - lo; }
};

struct PiecewisePlan {
  std::vector<Rational> breakpoints;
};

struct IntegrateOptions {
  /// Take cell ranges from endpoint values when f is certified monotone.
  bool monotone_fast_path = true;
  std::optional<Rational> lipschitz;
};

/// Sums certified cell ranges times the cell width over n equal cells.
/// u > v gives the negated enclosure of [v, u]; u == v gives [0, 0].
IntegralEnclosure integrate_enclosure(const FunctionSpec& f, const Rational& u,
                                      const Rational& v, long long n,
                                      Precision prec,
                                      const IntegrateOptions& opts = {});

/// Splits at the plan's breakpoints and integrates each piece with
/// n_per_piece cells. Breakpoints must be strictly increasing and inside
/// (u, v).
IntegralEnclosure integrate_piecewise(const FunctionSpec& f,
                                      const PiecewisePlan& plan,
                                      const Rational& u, const Rational& v,
                                      long long n_per_piece, Precision prec,
                                      const IntegrateOptions& opts = {});

/// Encl(u, w) against Encl(u, v) + Encl(v, w). Refuted only if they are
/// disjoint, which would be an implementation bug.
Verdict check_additivity(const FunctionSpec& f, const Rational& u,
                         const Rational& v, const Rational& w, long long n,
                         Precision prec);

/// F(v) - F(u) against the integral enclosure of f. Refuted when disjoint,
/// which certifies that f is not the derivative of F on [u, v].
Verdict newton_leibniz_check(const FunctionSpec& F, const FunctionSpec& f,
                             const Rational& u, const Rational& v, long long n,
                             Precision prec, const PiecewisePlan& plan = {});

/// (v - u) V / n: the most two integral systems of f can disagree on
/// [u, v] when V bounds the variation of f there. A Lipschitz constant M
/// gives V = M (v - u).
Rational uniqueness_gap(const Rational& u, const Rational& v, long long n,
                        const Rational& variation);

}  // namespace limitless
