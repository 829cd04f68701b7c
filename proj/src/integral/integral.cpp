#include "limitless/integral/integral.hpp"

#include "limitless/errors.hpp"
#include "limitless/expr/eval.hpp"
#include "limitless/expr/sign.hpp"

namespace limitless {

namespace {

IntegralEnclosure integrate_forward(const FunctionSpec& f, const Rational& u,
                                    const Rational& v, long long n,
                                    Precision prec,
                                    const IntegrateOptions& opts) {
  const Interval span(u, v);
  IntegralEnclosure out{u, v, Rational(0), Rational(0), n, std::nullopt, false,
                        {}};
  out.cells.reserve(n);
  const Rational h = (v - u) / Rational(n);
  auto grid = [&](long long k) { return k == n ? v : u + h * Rational(k); };

  if (opts.monotone_fast_path &&
      certify_monotone(f.body(), span, prec) != Monotone::Unknown) {
    // A monotone f takes its extremes on a cell at the cell's endpoints.
    out.monotone = true;
    Interval left = eval_point(f.body(), u, prec);
    for (long long k = 0; k < n; ++k) {
      const Interval right = eval_point(f.body(), grid(k + 1), prec);
      out.cells.push_back({grid(k), grid(k + 1), left.hull_with(right)});
      left = right;
    }
  } else {
    for (long long k = 0; k < n; ++k) {
      const Rational a = grid(k);
      const Rational b = grid(k + 1);
      out.cells.push_back({a, b, eval_enclosure(f.body(), Interval(a, b), prec)});
    }
  }
  Rational lo_sum;
  Rational hi_sum;
  for (const Cell& c : out.cells) {
    lo_sum += c.range.lo();
    hi_sum += c.range.hi();
  }
  out.lo = lo_sum * h;
  out.hi = hi_sum * h;
  return out;
}

void reverse(IntegralEnclosure& e) {
  std::swap(e.u, e.v);
  const Rational lo = -e.hi;
  e.hi = -e.lo;
  e.lo = lo;
}

void check_span(const FunctionSpec& f, const Rational& u, const Rational& v) {
  const Interval span = Interval::hull(u, v);
  if (!f.domain().contains(span)) {
    throw InvalidArgument(span.to_string() + " is outside the domain " +
                          f.domain().to_string());
  }
}

}  // namespace

IntegralEnclosure integrate_enclosure(const FunctionSpec& f, const Rational& u,
                                      const Rational& v, long long n,
                                      Precision prec,
                                      const IntegrateOptions& opts) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  check_span(f, u, v);
  if (u == v) {
    return IntegralEnclosure{u, v, Rational(0), Rational(0), n, Rational(0),
                             false, {}};
  }
  IntegralEnclosure out = u < v ? integrate_forward(f, u, v, n, prec, opts)
                                : integrate_forward(f, v, u, n, prec, opts);
  if (opts.lipschitz) {
    const Rational len = (v - u).abs();
    out.width_bound = *opts.lipschitz * len * len / Rational(n);
  }
  if (v < u) reverse(out);
  return out;
}

IntegralEnclosure integrate_piecewise(const FunctionSpec& f,
                                      const PiecewisePlan& plan,
                                      const Rational& u, const Rational& v,
                                      long long n_per_piece, Precision prec,
                                      const IntegrateOptions& opts) {
  if (!(u < v)) throw InvalidArgument("piecewise integration needs u < v");
  std::vector<Rational> cuts{u};
  for (const Rational& b : plan.breakpoints) {
    if (!(cuts.back() < b) || !(b < v)) {
      throw InvalidArgument("breakpoints must increase strictly inside (" +
                            u.to_string() + ", " + v.to_string() + ")");
    }
    cuts.push_back(b);
  }
  cuts.push_back(v);

  IntegralEnclosure out{u, v, Rational(0), Rational(0), 0, std::nullopt, true,
                        {}};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    IntegralEnclosure piece =
        integrate_enclosure(f, cuts[i], cuts[i + 1], n_per_piece, prec, opts);
    out.lo += piece.lo;
    out.hi += piece.hi;
    out.n += piece.n;
    out.monotone = out.monotone && piece.monotone;
    if (piece.width_bound) {
      out.width_bound = out.width_bound.value_or(Rational(0)) + *piece.width_bound;
    }
    out.cells.insert(out.cells.end(), piece.cells.begin(), piece.cells.end());
  }
  return out;
}

Verdict check_additivity(const FunctionSpec& f, const Rational& u,
                         const Rational& v, const Rational& w, long long n,
                         Precision prec) {
  if (!(u < v) || !(v < w)) throw InvalidArgument("additivity needs u < v < w");
  const Interval whole = integrate_enclosure(f, u, w, n, prec).value();
  const Interval parts = integrate_enclosure(f, u, v, n, prec).value() +
                         integrate_enclosure(f, v, w, n, prec).value();
  EnclosureComparison cmp{"S(u, w)", whole, "S(u, v) + S(v, w)", parts};
  if (!whole.intersects(parts)) {
    return Verdict{Status::Refuted, cmp,
                   "additivity broken: the enclosure code is wrong", prec.bits()};
  }
  return Verdict{Status::Certified, cmp, "", prec.bits()};
}

Verdict newton_leibniz_check(const FunctionSpec& F, const FunctionSpec& f,
                             const Rational& u, const Rational& v, long long n,
                             Precision prec, const PiecewisePlan& plan) {
  check_span(F, u, v);
  check_span(f, u, v);
  if (u == v) {
    const Interval zero(Rational(0));
    return Verdict{Status::Certified,
                   EnclosureComparison{"F(v) - F(u)", zero, "integral of f", zero},
                   "empty interval", prec.bits()};
  }
  if (v < u) throw InvalidArgument("Newton-Leibniz check needs u <= v");
  const Interval diff = eval_point(F.body(), v, prec) - eval_point(F.body(), u, prec);
  const IntegralEnclosure enc =
      plan.breakpoints.empty() ? integrate_enclosure(f, u, v, n, prec)
                               : integrate_piecewise(f, plan, u, v, n, prec);
  EnclosureComparison cmp{"F(v) - F(u)", diff, "integral of f", enc.value()};
  if (!diff.intersects(enc.value())) {
    return Verdict{Status::Refuted, cmp,
                   "F(v) - F(u) lies outside the integral enclosure, so f is "
                   "not the derivative of F on [u, v]",
                   prec.bits()};
  }
  return Verdict{Status::Certified, cmp, "", prec.bits()};
}

Rational uniqueness_gap(const Rational& u, const Rational& v, long long n,
                        const Rational& variation) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  return (v - u).abs() * variation / Rational(n);
}

}  // namespace limitless
