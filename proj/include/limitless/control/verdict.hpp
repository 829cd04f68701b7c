#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "limitless/numeric/interval.hpp"

namespace limitless {

enum class Status { Certified, Refuted, Inconclusive };

std::string_view status_name(Status s);

/// Points p, q in [u, v] with f(p) <= dq <= f(q), each comparison certified
/// on enclosures: f_p.hi <= dq.lo and dq.hi <= f_q.lo.
struct BracketWitness {
  Rational u;
  Rational v;
  Rational p;
  Rational q;
  Interval dq;
  Interval f_p;
  Interval f_q;
  /// Both inequalities hold strictly.
  bool strict = false;
};

enum class Side { Below, Above };

/// A certified range of f over [u, v] that misses dq entirely: with
/// side == Below, f_range.hi < dq.lo; with Above, f_range.lo > dq.hi.
struct Violation {
  Rational u;
  Rational v;
  Interval dq;
  Interval f_range;
  Side side = Side::Below;
  int precision_bits = 0;
};

/// Two enclosures of what should be the same number.
struct EnclosureComparison {
  std::string lhs_label;
  Interval lhs;
  std::string rhs_label;
  Interval rhs;
};

/// Exact algebra behind the cubic control claim: each identity was checked
/// by expanding both sides as polynomials in (u, v) and comparing
/// coefficients.
struct CubicCertificate {
  Rational a;
  Rational b;
  Rational c;
  Rational split;
  Interval window;
  std::vector<std::string> identities;
  int coefficients_compared = 0;
};

/// |g(v) - g(u)| exceeds bound * |v - u| at a sampled pair.
struct PairViolation {
  Rational u;
  Rational v;
  Interval lhs;
  Rational rhs;
};

using Payload = std::variant<std::monostate, BracketWitness, Violation,
                             EnclosureComparison, CubicCertificate,
                             PairViolation>;

struct Verdict {
  Status status = Status::Inconclusive;
  Payload payload;
  std::string note;
  int precision_bits = 0;
};

}  // namespace limitless
