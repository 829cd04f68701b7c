#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "limitless/control/claim.hpp"
#include "limitless/control/cubic.hpp"
#include "limitless/control/shape.hpp"
#include "limitless/errors.hpp"
#include "limitless/expr/derivative.hpp"
#include "limitless/expr/eval.hpp"
#include "limitless/expr/parser.hpp"
#include "oracles.hpp"

using namespace limitless;

namespace {

const Precision kPrec(64);

Interval iv(long long a, long long b) { return Interval(Rational(a), Rational(b)); }

ControlClaim claim(const char* F, const char* f, const Interval& d) {
  return ControlClaim(FunctionSpec(parse(F), d), FunctionSpec(parse(f), d), d);
}

const BracketWitness& witness(const Verdict& v) {
  return std::get<BracketWitness>(v.payload);
}

// Re-derives the certified ordering from scratch at the given precision.
bool witness_holds(const ControlClaim& c, const BracketWitness& w,
                   Precision prec) {
  const Interval dq = difference_quotient(c.controlled(), w.u, w.v, prec);
  const Interval fp = eval_point(c.control().body(), w.p, prec);
  const Interval fq = eval_point(c.control().body(), w.q, prec);
  return w.u <= w.p && w.p <= w.v && w.u <= w.q && w.q <= w.v &&
         fp.hi() <= dq.lo() && dq.hi() <= fq.lo();
}

struct Family {
  const char* F;
  const char* f;
  Interval domain;
  // Closed-form difference quotient, computed without the library's
  // evaluator.
  std::function<Interval(const Rational&, const Rational&)> dq;
};

std::vector<Family> basic_families() {
  return {
      {"x^2", "2*x", iv(0, 100),
       [](const Rational& u, const Rational& v) { return Interval(u + v); }},
      {"x^3", "3*x^2", iv(0, 100),
       [](const Rational& u, const Rational& v) {
         return Interval(u * u + u * v + v * v);
       }},
      {"sqrt(x)", "1/(2*sqrt(x))", Interval(Rational(1, 10), Rational(100)),
       [](const Rational& u, const Rational& v) {
         const Interval su = oracle::sqrt_bisection(u.numerator(), u.denominator(), 80);
         const Interval sv = oracle::sqrt_bisection(v.numerator(), v.denominator(), 80);
         return Interval(Rational(1)) / (su + sv);
       }},
      {"1/x", "-1/x^2", Interval(Rational(1, 10), Rational(100)),
       [](const Rational& u, const Rational& v) {
         return Interval(Rational(-1) / (u * v));
       }},
  };
}

}  // namespace

TEST_CASE("difference quotient examples") {
  const FunctionSpec sq(parse("x^2"), iv(-10, 10));
  CHECK(difference_quotient(sq, Rational(1), Rational(2), kPrec) ==
        Interval(Rational(3)));
  const FunctionSpec cube(parse("x^3"), iv(-10, 10));
  CHECK(difference_quotient(cube, Rational(1), Rational(2), kPrec) ==
        Interval(Rational(7)));
  const FunctionSpec c(parse("5"), iv(-10, 10));
  CHECK(difference_quotient(c, Rational(-3), Rational(4, 7), kPrec) ==
        Interval(Rational(0)));
  CHECK_THROWS_AS(difference_quotient(sq, Rational(1), Rational(1), kPrec),
                  InvalidArgument);
  CHECK_THROWS_AS(difference_quotient(sq, Rational(1), Rational(11), kPrec),
                  InvalidArgument);
  const Interval root = difference_quotient(FunctionSpec(parse("sqrt(x)"), iv(0, 20)),
                                            Rational(9), Rational(10), kPrec);
  CHECK_FALSE(root.is_point());
  // sqrt(10) - 3 = 0.16227766016...
  CHECK(root.lo() <= Rational::parse("0.1622776602"));
  CHECK(root.hi() >= Rational::parse("0.1622776601"));
}

TEST_CASE("check_bracket examples") {
  const Verdict ok = check_bracket(claim("x^2", "2*x", iv(0, 10)), Rational(1),
                                   Rational(2), 8, kPrec);
  REQUIRE(ok.status == Status::Certified);
  CHECK(witness(ok).p == Rational(1));
  CHECK(witness(ok).q == Rational(2));
  CHECK(witness(ok).f_p == Interval(Rational(2)));
  CHECK(witness(ok).dq == Interval(Rational(3)));
  CHECK(witness(ok).strict);

  const Verdict bad = check_bracket(claim("x^2", "3*x", iv(0, 10)), Rational(2),
                                    Rational(3), 8, kPrec);
  REQUIRE(bad.status == Status::Refuted);
  const auto& viol = std::get<Violation>(bad.payload);
  CHECK(viol.dq == Interval(Rational(5)));
  CHECK(viol.f_range == Interval(Rational(6), Rational(9)));
  CHECK(viol.side == Side::Above);

  const Verdict flat = check_bracket(claim("7", "0", iv(0, 10)), Rational(1, 3),
                                     Rational(5), 4, kPrec);
  REQUIRE(flat.status == Status::Certified);
  CHECK(witness(flat).p == Rational(1, 3));
  CHECK(witness(flat).q == Rational(1, 3));
  CHECK_FALSE(witness(flat).strict);

  CHECK_THROWS_AS(check_bracket(claim("x^2", "2*x", iv(0, 10)), Rational(2),
                                Rational(1), 8, kPrec),
                  InvalidArgument);
}

TEST_CASE("interior witnesses are found on the grid") {
  // x^3 over [-1, 1]: dq = 1 but f(-1) = f(1) = 3, so p must be interior.
  const Verdict v = check_bracket(claim("x^3", "3*x^2", iv(-1, 1)), Rational(-1),
                                  Rational(1), 4, kPrec);
  REQUIRE(v.status == Status::Certified);
  CHECK(witness(v).p > Rational(-1));
  CHECK(witness(v).p < Rational(1));
  CHECK(Rational(3) * witness(v).p * witness(v).p <= Rational(1));
}

TEST_CASE("the four basic families bracket at the endpoints") {
  oracle::RationalGen gen(41);
  for (const Family& fam : basic_families()) {
    const ControlClaim c = claim(fam.F, fam.f, fam.domain);
    CAPTURE(fam.F);
    for (int i = 0; i < 200; ++i) {
      Rational u = gen.in(fam.domain.lo(), fam.domain.hi());
      Rational v = gen.in(fam.domain.lo(), fam.domain.hi());
      if (u == v) continue;
      if (v < u) std::swap(u, v);
      const Verdict verdict = check_bracket(c, u, v, 8, kPrec);
      REQUIRE(verdict.status == Status::Certified);
      const BracketWitness& w = witness(verdict);
      const bool endpoints = (w.p == u && w.q == v) || (w.p == v && w.q == u);
      CHECK(endpoints);
      CHECK(w.strict);
      CHECK(w.dq.intersects(fam.dq(u, v)));
      CHECK(witness_holds(c, w, kPrec.doubled()));
    }
  }
}

TEST_CASE("falsification") {
  const auto found =
      falsify_control(claim("x^2", "3*x", iv(1, 3)), 100, 0, kPrec);
  REQUIRE(found.has_value());
  // Any [u, v] inside [2, 3] works; the found one must re-verify.
  CHECK(refute_bracket(claim("x^2", "3*x", iv(1, 3)), found->u, found->v,
                       kPrec.doubled())
            .has_value());
  CHECK(found->f_range.lo() > found->dq.hi());
  CHECK_FALSE(falsify_control(claim("x^2", "2*x", iv(0, 10)), 1000, 0, kPrec)
                  .has_value());
  // Deterministic in the seed.
  const auto again =
      falsify_control(claim("x^2", "3*x", iv(1, 3)), 100, 0, kPrec);
  CHECK(again->u == found->u);
  CHECK(again->v == found->v);
}

TEST_CASE("subinterval family") {
  const auto fam = subinterval_family(iv(0, 8), 20, 3);
  CHECK(fam.size() == 20);
  CHECK(fam[0] == std::make_pair(Rational(0), Rational(8)));
  CHECK(fam[2] == std::make_pair(Rational(0), Rational(4)));
  for (const auto& [u, v] : fam) {
    CHECK(u < v);
    CHECK(Rational(0) <= u);
    CHECK(v <= Rational(8));
  }
  CHECK(subinterval_family(iv(0, 8), 20, 3) == fam);
  CHECK_FALSE(subinterval_family(iv(0, 8), 20, 4) == fam);
}

TEST_CASE("gluing") {
  const Rational B(50);
  const ControlClaim left = claim("x^3", "3*x^2", Interval(-B, Rational(0)));
  const ControlClaim right = claim("x^3", "3*x^2", Interval(Rational(0), B));
  const ControlClaim both = glue_claims(left, right);
  CHECK(both.domain() == Interval(-B, B));
  CHECK(both.pieces().size() == 2);
  const Verdict v = check_bracket(both, Rational(-1), Rational(2), 8, kPrec);
  REQUIRE(v.status == Status::Certified);
  CHECK(v.note.find("split at 0") != std::string::npos);
  CHECK(witness_holds(both, witness(v), kPrec.doubled()));

  CHECK_THROWS_AS(glue_claims(claim("x", "1", iv(0, 1)), claim("x", "1", iv(2, 3))),
                  DisjointDomains);
  CHECK(glue_claims(claim("x", "1", iv(0, 2)), claim("x", "1", iv(1, 3))).domain() ==
        iv(0, 3));
  CHECK_THROWS_AS(glue_claims(claim("x", "1", iv(0, 2)), claim("x^2", "2*x", iv(1, 3))),
                  InvalidArgument);

  // A claim that is only true piecewise: sgn controls abs on each side of 0
  // and on the union.
  const ControlClaim a = claim("abs(x)", "sgn(x)", iv(-4, 0));
  const ControlClaim b = claim("abs(x)", "sgn(x)", iv(0, 4));
  const Verdict straddle = check_bracket(glue_claims(a, b), Rational(-3),
                                         Rational(1), 4, kPrec);
  CHECK(straddle.status == Status::Certified);
}

TEST_CASE("glued verdicts agree with direct ones inside a piece") {
  const ControlClaim direct = claim("sin(x)", "cos(x)", iv(-3, 3));
  const ControlClaim glued = glue_claims(claim("sin(x)", "cos(x)", iv(-3, 1)),
                                         claim("sin(x)", "cos(x)", iv(0, 3)));
  oracle::RationalGen gen(8);
  for (int i = 0; i < 60; ++i) {
    Rational u = gen.in(Rational(-3), Rational(3));
    Rational v = gen.in(Rational(-3), Rational(3));
    if (u == v) continue;
    if (v < u) std::swap(u, v);
    const Verdict a = check_bracket(direct, u, v, 16, kPrec);
    const Verdict b = check_bracket(glued, u, v, 16, kPrec);
    CHECK(a.status == Status::Certified);
    CHECK(b.status == a.status);
  }
}

TEST_CASE("cubic certificate") {
  const Verdict zero = cubic_control_certificate(Rational(0), Rational(0),
                                                 Rational(0), iv(-10, 10));
  REQUIRE(zero.status == Status::Certified);
  CHECK(std::get<CubicCertificate>(zero.payload).split == Rational(0));

  const Verdict v = cubic_control_certificate(Rational(3), Rational(1), Rational(5),
                                              iv(-10, 10));
  REQUIRE(v.status == Status::Certified);
  const auto& cert = std::get<CubicCertificate>(v.payload);
  CHECK(cert.split == Rational(-1));
  CHECK(cert.identities.size() == 5);
  CHECK(cert.coefficients_compared > 10);

  oracle::RationalGen gen(77);
  for (int i = 0; i < 10; ++i) {
    const Rational a = gen.in(Rational(-9), Rational(9));
    const Rational b = gen.in(Rational(-9), Rational(9));
    const Rational c = gen.in(Rational(-9), Rational(9));
    const Interval window = iv(-10, 10);
    CHECK(cubic_control_certificate(a, b, c, window).status == Status::Certified);
    const ControlClaim cl = cubic_claim(a, b, c, window);
    for (int j = 0; j < 20; ++j) {
      Rational u = gen.in(window.lo(), window.hi());
      Rational w = gen.in(window.lo(), window.hi());
      if (u == w) continue;
      if (w < u) std::swap(u, w);
      const Verdict check = check_bracket(cl, u, w, 16, kPrec);
      CHECK(check.status == Status::Certified);
      // Independent oracle: D from the closed form.
      const Rational D = w * w + u * w + u * u + a * (u + w) + b;
      CHECK(witness(check).dq == Interval(D));
    }
  }
}

TEST_CASE("shape inference: the six implications") {
  SUBCASE("zero") {
    const ShapeReport r = infer_shape(claim("5", "0", iv(-2, 2)),
                                      Fact::IdenticallyZero, kPrec);
    CHECK(r.property == Shape::Constant);
    CHECK(r.spot_checks_undecided == 0);
  }
  SUBCASE("constant") {
    const ShapeReport r = infer_shape(claim("3*x + 1", "3", iv(-2, 2)),
                                      Fact::IdenticallyConst, kPrec);
    CHECK(r.property == Shape::Linear);
  }
  SUBCASE("positive") {
    const ShapeReport r =
        infer_shape(claim("x^2", "2*x", iv(1, 5)), Fact::Positive, kPrec);
    CHECK(r.property == Shape::Increasing);
    CHECK(r.spot_checks == 64);
    CHECK(r.spot_checks_undecided == 0);
  }
  SUBCASE("negative") {
    const ShapeReport r = infer_shape(
        claim("1/x", "-1/x^2", Interval(Rational(1, 10), Rational(100))),
        Fact::Negative, kPrec);
    CHECK(r.property == Shape::Decreasing);
  }
  SUBCASE("increasing") {
    const ShapeReport r =
        infer_shape(claim("x^2", "2*x", iv(0, 5)), Fact::Increasing, kPrec);
    CHECK(r.property == Shape::ConvexDown);
  }
  SUBCASE("decreasing") {
    const ShapeReport r = infer_shape(
        claim("sqrt(x)", "1/(2*sqrt(x))", Interval(Rational(1, 4), Rational(4))),
        Fact::Decreasing, kPrec);
    CHECK(r.property == Shape::ConvexUp);
    const ShapeReport s = infer_shape(
        claim("sin(x)", "cos(x)", Interval(Rational(0), Rational(3, 2))),
        Fact::Decreasing, kPrec);
    CHECK(s.property == Shape::ConvexUp);
  }
  CHECK_THROWS_AS(
      infer_shape(claim("x^3", "3*x^2", iv(-1, 1)), Fact::Positive, kPrec),
      PremiseNotCertified);
  CHECK_THROWS_AS(
      infer_shape(claim("x^2", "2*x", iv(-1, 1)), Fact::Decreasing, kPrec),
      PremiseNotCertified);
  // A false claim whose conclusion the grid contradicts.
  CHECK_THROWS_AS(infer_shape(claim("-x", "1", iv(0, 1)), Fact::Positive, kPrec),
                  ConclusionRefuted);
}

TEST_CASE("approximation with error bound") {
  const Interval d(Rational(1), Rational(100));
  const FunctionSpec F(parse("sqrt(x)"), d);
  const FunctionSpec f(parse("1/(2*sqrt(x))"), d);
  const Approximation a =
      approximate_with_error(F, f, Rational(9), Rational(10), kPrec);
  CHECK(a.approx == Rational(19, 6));
  CHECK(a.error_bound <= Rational(1, 114));
  CHECK(a.direction == Monotone::Decreasing);
  // sqrt(10) must sit in the bracket and within the bound.
  const Interval root = oracle::sqrt_bisection(10, 1, 80);
  CHECK(a.bracket.contains(root));
  CHECK((root - Interval(a.approx)).mag() <= a.error_bound);

  const FunctionSpec sq(parse("x^2"), iv(0, 10));
  const FunctionSpec two(parse("2*x"), iv(0, 10));
  const Approximation b =
      approximate_with_error(sq, two, Rational(3), Rational(10, 3), kPrec);
  CHECK(b.approx == Rational(11));
  CHECK(b.error_bound == Rational(2, 9));
  CHECK(b.error_bound >= Rational(100, 9) - Rational(11));

  const Approximation same =
      approximate_with_error(sq, two, Rational(3), Rational(3), kPrec);
  CHECK(same.approx == Rational(9));
  CHECK(same.error_bound == Rational(0));

  const FunctionSpec s(parse("sin(x)"), iv(0, 4));
  const FunctionSpec c(parse("cos(x)"), iv(0, 4));
  CHECK_THROWS_AS(approximate_with_error(s, c, Rational(0), Rational(4), kPrec),
                  PremiseNotCertified);
}

TEST_CASE("approximation bound is sound on random spans") {
  struct Pair {
    const char* F;
    const char* f;
    Interval d;
  };
  const Pair pairs[] = {
      {"x^2", "2*x", iv(0, 10)},
      {"x^3", "3*x^2", iv(0, 10)},
      {"sqrt(x)", "1/(2*sqrt(x))", iv(1, 50)},
      {"1/x", "-1/x^2", iv(1, 50)},
      {"-cos(x)", "sin(x)", Interval(Rational(0), Rational(3, 2))},
  };
  oracle::RationalGen gen(123);
  for (const Pair& p : pairs) {
    const FunctionSpec F(parse(p.F), p.d);
    const FunctionSpec f(parse(p.f), p.d);
    for (int i = 0; i < 40; ++i) {
      const Rational base = Rational(gen.in(p.d.lo(), p.d.hi()).floor());
      const Rational target = gen.in(p.d.lo(), p.d.hi());
      if (!eval_exact(F.body(), base) || !eval_exact(f.body(), base)) continue;
      const Approximation a = approximate_with_error(F, f, base, target, kPrec);
      const Interval truth = eval_point(F.body(), target, Precision(128));
      CAPTURE(p.F);
      CHECK((truth - Interval(a.approx)).mag() <= a.error_bound + truth.width());
      CHECK(a.bracket.intersects(truth));
    }
  }
}

TEST_CASE("symbolic derivatives pass the control check") {
  const std::pair<const char*, Interval> cases[] = {
      {"x^4 - 2*x^2", iv(-3, 3)},
      {"sqrt(x)", iv(1, 9)},
      {"sin(x)", iv(-1, 1)},
      {"cos(x)", iv(0, 3)},
      {"1/(x^2 + 1)", iv(-2, 2)},
      {"abs(x)", iv(-2, 2)},
      {"x*sin(x)", iv(0, 2)},
  };
  oracle::RationalGen gen(9);
  for (const auto& [text, d] : cases) {
    const Expr F = parse(text);
    const Expr f = *symbolic_derivative(F);
    const ControlClaim c(FunctionSpec(F, d), FunctionSpec(f, d), d);
    CAPTURE(text);
    for (int i = 0; i < 30; ++i) {
      Rational u = gen.in(d.lo(), d.hi());
      Rational v = gen.in(d.lo(), d.hi());
      if (u == v) continue;
      if (v < u) std::swap(u, v);
      CHECK(check_bracket(c, u, v, 32, kPrec).status == Status::Certified);
    }
  }
}
