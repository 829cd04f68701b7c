#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "limitless/control/verdict.hpp"
#include "limitless/expr/expr.hpp"

namespace limitless {

/// "f controls F on the interval Q": for every u < v in Q there are p, q in
/// [u, v] with f(p) <= (F(v) - F(u))/(v - u) <= f(q).
class ControlClaim {
 public:
  /// Throws InvalidArgument unless both function domains contain `domain`.
  ControlClaim(FunctionSpec controlled, FunctionSpec control, Interval domain);

  const FunctionSpec& controlled() const { return controlled_; }
  const FunctionSpec& control() const { return control_; }
  const Interval& domain() const { return domain_; }
  /// Intervals the claim was assembled from by gluing, sorted by left end.
  /// A claim that was never glued has the single piece `domain()`.
  const std::vector<Interval>& pieces() const { return pieces_; }

 private:
  friend ControlClaim glue_claims(const ControlClaim& a, const ControlClaim& b);

  FunctionSpec controlled_;
  FunctionSpec control_;
  Interval domain_;
  std::vector<Interval> pieces_;
};

/// (F(v) - F(u))/(v - u); a point interval when both values are exact.
/// Throws InvalidArgument when u == v or either point lies outside
/// F.domain().
Interval difference_quotient(const FunctionSpec& F, const Rational& u,
                             const Rational& v, Precision prec);

/// Looks for a witness (p, q) over the endpoints, then `grid_n` equispaced
/// interior points, then dyadic points. Refutes only from a certified range
/// of f over the whole of [u, v]. For a glued claim, a [u, v] that leaves
/// every piece is split at shared points and the sub-witnesses combined by
/// taking the smallest and largest control values.
Verdict check_bracket(const ControlClaim& claim, const Rational& u,
                      const Rational& v, int grid_n, Precision prec);

/// Violation over [u, v] when the certified range of f excludes the
/// difference quotient; empty otherwise.
std::optional<Violation> refute_bracket(const ControlClaim& claim,
                                        const Rational& u, const Rational& v,
                                        Precision prec);

/// Subintervals of `domain`: dyadic cells in level order interleaved with
/// seeded random pairs. Deterministic in (domain, count, seed).
std::vector<std::pair<Rational, Rational>> subinterval_family(
    const Interval& domain, int count, std::uint64_t seed);

/// First certified Violation among `budget` subintervals of the claim
/// domain; empty when none was found, which proves nothing.
std::optional<Violation> falsify_control(const ControlClaim& claim, int budget,
                                         std::uint64_t seed, Precision prec);

/// Claim on the union of the two domains. Throws DisjointDomains when the
/// domains do not meet, InvalidArgument when the function pairs differ.
ControlClaim glue_claims(const ControlClaim& a, const ControlClaim& b);

}  // namespace limitless
