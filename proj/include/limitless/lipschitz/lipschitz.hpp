#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "limitless/control/verdict.hpp"
#include "limitless/expr/expr.hpp"

namespace limitless {

enum class LipschitzMethod { DerivativeRange, SyntacticRule, UserSupplied };

std::string_view method_name(LipschitzMethod m);

/// |fn(u) - fn(v)| <= M |u - v| for all u, v in `domain`.
struct LipschitzCert {
  Expr fn;
  Interval domain;
  Rational M;
  LipschitzMethod method = LipschitzMethod::DerivativeRange;
  /// Equal pieces the derivative enclosure was taken over.
  long long pieces = 1;
};

struct NotLipschitz {
  std::string reason;
};

using LipschitzResult = std::variant<LipschitzCert, NotLipschitz>;

struct LipschitzOptions {
  /// Deepest refinement is 2^max_level pieces.
  int max_level = 10;
  /// A derivative bound above this is reported as unbounded within budget.
  Rational cap = Rational(1000000000000LL);
};

/// M from an enclosure of |fn'| over equal pieces of `domain`, refined
/// until the bound stops improving. A constant gets M = 0 by rule.
/// NotLipschitz for sgn of a non-constant argument, for a derivative that
/// cannot be enclosed near a singular point, or for a bound above the cap.
/// Throws InvalidArgument when `domain` leaves fn.domain().
LipschitzResult lipschitz_bound(const FunctionSpec& fn, const Interval& domain,
                                Precision prec, LipschitzOptions opts = {});

/// A caller-asserted constant, recorded as such.
LipschitzCert user_lipschitz(const FunctionSpec& fn, const Interval& domain,
                             const Rational& M);

struct LinqunSample {
  Rational u;
  Rational v;
  Rational s;
};

/// Deterministic triples u < v, s in [u, v]: dyadic cells and seeded random
/// pairs, plus pairs shrinking onto the domain midpoint, 0 and random
/// centres; s runs over u, v, the midpoint and a seeded point.
std::vector<LinqunSample> linqun_samples(const Interval& domain, int sample_n,
                                         std::uint64_t seed);

struct LinqunCounterexample {
  Rational u;
  Rational v;
  Rational s;
  /// Enclosure of |(f(v) - f(u))/(v - u) - g(s)|.
  Interval lhs;
  /// M |v - u|.
  Rational rhs;
  /// Certified lower bound of lhs - rhs; positive.
  Rational gap;
};

struct LinqunReport {
  Interval domain;
  Rational M;
  int samples_checked = 0;
  /// Samples where enclosures were too wide to decide.
  int undecided = 0;
  /// Lower bound of min over decided samples of M|v - u| - |dq - g(s)|.
  Rational worst_slack;
  bool passed() const { return undecided == 0 && worst_slack.sign() >= 0; }
};

using LinqunResult = std::variant<LinqunReport, LinqunCounterexample>;

/// Checks |(f(v) - f(u))/(v - u) - g(s)| <= M |v - u| and the product form
/// |f(v) - f(u) - g(s)(v - u)| <= M (v - u)^2 on every sample. The two forms
/// are evaluated separately; a certified disagreement between them throws
/// std::logic_error.
LinqunResult check_linqun(const FunctionSpec& f, const FunctionSpec& g,
                          const Interval& domain, const Rational& M,
                          int sample_n, Precision prec, std::uint64_t seed = 0);

/// |g(v) - g(u)| <= 2M |v - u| on the sample pairs, after check_linqun has
/// passed on the same samples. Inconclusive with a "premise missing" note
/// when it has not.
Verdict control_is_2M_lipschitz(const FunctionSpec& f, const FunctionSpec& g,
                                const Interval& domain, const Rational& M,
                                int sample_n, Precision prec,
                                std::uint64_t seed = 0);

struct SubdivisionBracket {
  Rational p;
  Rational q;
  Interval dq;
  Interval g_p;
  Interval g_q;
  /// How each side was found: "constant quotient" or the subdivided cell
  /// and piece count.
  std::string p_route;
  std::string q_route;
};

/// Bracket points for g over [u, v] built the constructive way: find a
/// subinterval [r, s] whose quotient is below (above) the full one by d > 0,
/// split it into n pieces with M (s - r)/n < d, and take the left end of
/// the piece with the smallest (largest) quotient. The pair is returned
/// only after g(p) <= dq <= g(q) is certified; otherwise HypothesisViolated.
/// SearchExhausted when no [r, s] with a certified gap turns up within
/// `depth` dyadic levels and the quotient is not provably constant.
SubdivisionBracket find_bracket_by_subdivision(const FunctionSpec& f,
                                               const FunctionSpec& g,
                                               const Rational& M,
                                               const Rational& u,
                                               const Rational& v,
                                               Precision prec, int depth = 12);

}  // namespace limitless
