#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "expr_gen.hpp"
#include "limitless/errors.hpp"
#include "limitless/expr/derivative.hpp"
#include "limitless/expr/eval.hpp"
#include "limitless/expr/parser.hpp"
#include "oracles.hpp"

using namespace limitless;

namespace {

Expr x() { return Expr::var(); }
Expr k(long long v) { return Expr::constant(Rational(v)); }
Expr k(long long p, long long q) { return Expr::constant(Rational(p, q)); }

bool expects(const ParseError& e, const std::string& token) {
  const auto& v = e.expected();
  return std::find(v.begin(), v.end(), token) != v.end();
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
  const Expr cubic = Expr::add(
      Expr::add(Expr::add(Expr::pow(x(), 3), Expr::mul(k(2), Expr::pow(x(), 2))),
                x()),
      k(1));
  CHECK(parse("x^3 + 2*x^2 + x + 1") == cubic);
  CHECK(parse("sqrt(x)") == Expr::sqrt(x()));
  CHECK(parse("3/19") == k(3, 19));
  CHECK(parse("3 / 19") == Expr::div(k(3), k(19)));
  CHECK(parse("-x^2") == Expr::sub(Expr(), Expr::pow(x(), 2)));
  CHECK(parse("-3") == k(-3));
  CHECK(parse("x^-1") == Expr::pow(x(), -1));
  CHECK(parse("x^(-1)") == Expr::pow(x(), -1));
  CHECK(parse("0.25") == k(1, 4));
  CHECK(parse("x ÷ 2") == Expr::div(x(), k(2)));
  CHECK(parse("1/(2*sqrt(x))") ==
        Expr::div(k(1), Expr::mul(k(2), Expr::sqrt(x()))));
  CHECK(parse("2/3^2") == Expr::div(k(2), Expr::pow(k(3), 2)));
  CHECK(parse("1/2/3") == Expr::div(k(1, 2), k(3)));
  CHECK(parse("x - 1 - 2") == Expr::sub(Expr::sub(x(), k(1)), k(2)));
}

TEST_CASE("parse errors carry offset and expected set") {
  try {
    (void)parse("x +");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
    CHECK(expects(e, "number"));
    CHECK(expects(e, "x"));
    CHECK(expects(e, "("));
  }
  try {
    (void)parse("x^");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
    CHECK(expects(e, "integer"));
  }
  try {
    (void)parse("foo(x)");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 0);
  }
  CHECK_THROWS_AS(parse("x^2^3"), ParseError);
  CHECK_THROWS_AS(parse("x^1.5"), ParseError);
  CHECK_THROWS_AS(parse("(x"), ParseError);
  CHECK_THROWS_AS(parse("x)"), ParseError);
  CHECK_THROWS_AS(parse("1/0"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("2 $ x"), ParseError);
  CHECK_THROWS_AS(parse("1."), ParseError);
  CHECK_THROWS_AS(parse("x^99999"), ParseError);
}

TEST_CASE("format examples") {
  CHECK(format(Expr::sqrt(x())) == "sqrt(x)");
  CHECK(format(k(3, 19)) == "3/19");
  CHECK(format(parse("x^3+2*x^2")) == "x^3 + 2*x^2");
  CHECK(format(Expr::pow(x(), -2)) == "x^(-2)");
  CHECK(format(Expr::sub(Expr(), Expr::pow(x(), 2))) == "-x^2");
  CHECK(format(Expr::pow(Expr::sub(Expr(), x()), 2)) == "(-x)^2");
  CHECK(format(Expr::div(k(3), k(19))) == "3 / 19");
  CHECK(format(Expr::add(x(), k(-1))) == "x + (-1)");
  CHECK(format(Expr::sub(Expr(), k(5))) == "0 - 5");
}

TEST_CASE("round trip on the corpus") {
  int checked = 0;
  for (const std::string& text : oracle::kParserCorpus) {
    CAPTURE(text);
    const Expr e = parse(text);
    const std::string printed = format(e);
    CAPTURE(printed);
    CHECK(parse(printed) == e);
    CHECK(format(parse(printed)) == printed);
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("round trip on generated trees") {
  oracle::ExprGen gen(2024);
  for (int i = 0; i < 1000; ++i) {
    const Expr e = gen.any(5);
    const std::string printed = format(e);
    CAPTURE(printed);
    Expr back;
    REQUIRE_NOTHROW(back = parse(printed));
    CHECK(back == e);
  }
}

TEST_CASE("eval_exact") {
  CHECK(eval_exact(parse("x^2"), Rational(3, 2)) == Rational(9, 4));
  CHECK(eval_exact(parse("sgn(x)"), Rational(-5)) == Rational(-1));
  CHECK_FALSE(eval_exact(parse("sqrt(x)"), Rational(10)).has_value());
  CHECK(eval_exact(parse("sqrt(x)"), Rational(9, 4)) == Rational(3, 2));
  CHECK(eval_exact(parse("abs(x)"), Rational(-7, 3)) == Rational(7, 3));
  CHECK(eval_exact(parse("cos(x)"), Rational(0)) == Rational(1));
  CHECK_FALSE(eval_exact(parse("sin(x)"), Rational(1)).has_value());
  CHECK(eval_exact(parse("x^0"), Rational(0)) == Rational(1));
  // sgn of an irrational value is still exact.
  CHECK(eval_exact(parse("sgn(sqrt(x) - 3)"), Rational(10)) == Rational(1));
  CHECK_THROWS_AS(eval_exact(parse("1/x"), Rational(0)), EvalDomainError);
  CHECK_THROWS_AS(eval_exact(parse("sqrt(x)"), Rational(-1)), EvalDomainError);
  CHECK_THROWS_AS(eval_exact(parse("x^-2"), Rational(0)), EvalDomainError);
}

TEST_CASE("eval_enclosure") {
  const Precision p(40);
  CHECK(eval_enclosure(parse("2*x"), Interval(Rational(1), Rational(2)), p) ==
        Interval(Rational(2), Rational(4)));
  const Interval r10 = eval_enclosure(parse("sqrt(x)"), Interval(Rational(10)), p);
  CHECK(r10.contains(oracle::sqrt_bisection(10, 1, 45)));
  CHECK(r10.width() <= Rational(BigInt(1), BigInt(1) << 39));
  CHECK_THROWS_AS(
      eval_enclosure(parse("1/x"), Interval(Rational(-1), Rational(1)), p),
      EvalDomainError);
  CHECK(eval_enclosure(parse("sgn(x)"), Interval(Rational(-1), Rational(1)), p) ==
        Interval(Rational(-1), Rational(1)));
  CHECK(eval_enclosure(parse("sgn(x)"), Interval(Rational(0), Rational(1)), p) ==
        Interval(Rational(0), Rational(1)));
}

TEST_CASE("exact values lie inside point enclosures") {
  oracle::ExprGen gen(99);
  const Precision p(48);
  int exact_hits = 0;
  for (int i = 0; i < 1000; ++i) {
    const Expr e = gen.any(4);
    const Rational at = gen.numbers().in(Rational(-3), Rational(3));
    std::optional<Rational> exact;
    try {
      exact = eval_exact(e, at);
    } catch (const EvalDomainError&) {
      continue;
    }
    if (!exact) continue;
    ++exact_hits;
    CAPTURE(format(e));
    CAPTURE(at);
    CHECK(eval_enclosure(e, Interval(at), p).contains(*exact));
  }
  CHECK(exact_hits > 300);
}

TEST_CASE("enclosures over intervals contain sampled exact values") {
  oracle::ExprGen gen(5);
  const Precision p(40);
  for (int i = 0; i < 500; ++i) {
    const Expr e = gen.any(4);
    const Interval box = gen.numbers().interval_in(Rational(-2), Rational(2));
    Interval enc(Rational(0));
    try {
      enc = eval_enclosure(e, box, p);
    } catch (const EvalDomainError&) {
      continue;
    }
    for (int j = 0; j < 5; ++j) {
      const Rational at = gen.numbers().in(box.lo(), box.hi());
      const Interval point = eval_point(e, at, p);
      CAPTURE(format(e));
      CHECK(enc.intersects(point));
      if (point.is_point()) CHECK(enc.contains(point.lo()));
    }
  }
}

TEST_CASE("function spec rejects poles") {
  CHECK_NOTHROW(FunctionSpec(parse("1/x"), Interval(Rational(1, 10), Rational(100))));
  CHECK_THROWS_AS(FunctionSpec(parse("1/x"), Interval(Rational(-1), Rational(1))),
                  EvalDomainError);
  CHECK_THROWS_AS(FunctionSpec(parse("sqrt(x)"), Interval(Rational(-1), Rational(1))),
                  EvalDomainError);
  // One wide evaluation of x^2 - x + 1 over [-3, 3] gives [-3, 13]; bisection
  // settles it.
  CHECK_NOTHROW(FunctionSpec(parse("1/(x^2 - x + 1)"),
                             Interval(Rational(-3), Rational(3))));
}

TEST_CASE("symbolic derivative") {
  CHECK(format(*symbolic_derivative(parse("x^3"))) == "3*x^2");
  CHECK(format(*symbolic_derivative(parse("x^2"))) == "2*x");
  CHECK(*symbolic_derivative(parse("x^7")) == parse("7*x^6"));
  CHECK(*symbolic_derivative(parse("sqrt(x)")) == parse("1/(2*sqrt(x))"));
  CHECK(*symbolic_derivative(parse("sin(x)")) == parse("cos(x)"));
  CHECK(*symbolic_derivative(parse("cos(x)")) == parse("-sin(x)"));
  CHECK(*symbolic_derivative(parse("-cos(x)")) == parse("sin(x)"));
  CHECK(*symbolic_derivative(parse("1/x")) == parse("-1 / x^2"));
  CHECK(*symbolic_derivative(parse("abs(x)")) == parse("sgn(x)"));
  CHECK(*symbolic_derivative(parse("5")) == k(0));
  CHECK(*symbolic_derivative(parse("2*x")) == k(2));
  CHECK_FALSE(symbolic_derivative(parse("sgn(x)")).has_value());
  CHECK_FALSE(symbolic_derivative(parse("x*sgn(x)")).has_value());
  // sgn of a constant is a constant.
  CHECK(*symbolic_derivative(parse("sgn(2)*x")) == parse("sgn(2)"));
}

TEST_CASE("derivatives agree with exact difference quotients of polynomials") {
  // For a polynomial P, (P(x+h) - P(x))/h - P'(x) is O(h); with h tiny and
  // exact arithmetic the gap must shrink proportionally.
  oracle::ExprGen gen(31);
  for (int i = 0; i < 200; ++i) {
    Expr poly = k(gen.numbers().integer(-5, 5));
    for (int d = 1; d <= 4; ++d) {
      poly = Expr::add(poly, Expr::mul(k(gen.numbers().integer(-5, 5)),
                                       Expr::pow(x(), d)));
    }
    const Expr dp = *symbolic_derivative(poly);
    const Rational at = gen.numbers().in(Rational(-2), Rational(2));
    const Rational h(1, 1 << 20);
    const Rational dq =
        (*eval_exact(poly, at + h) - *eval_exact(poly, at)) / h;
    const Rational gap = (dq - *eval_exact(dp, at)).abs();
    CAPTURE(format(poly));
    CHECK(gap <= Rational(1000) * h);
  }
}
