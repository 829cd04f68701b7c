#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "limitless/numeric/rational.hpp"

namespace limitless {

/// Closed interval [lo, hi] with exact rational endpoints, lo <= hi.
///
/// Field operations are exact on the endpoints, so the returned interval is
/// the exact image set hull; nothing needs rounding until a transcendental
/// kernel is involved.
class Interval {
 public:
  Interval() = default;
  /// Degenerate interval [x, x].
  Interval(Rational point);  // NOLINT(google-explicit-constructor)
  /// Throws InvalidArgument when lo > hi.
  Interval(Rational lo, Rational hi);

  /// Builds [min(a, b), max(a, b)].
  static Interval hull(const Rational& a, const Rational& b);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  bool is_point() const { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return midpoint(lo_, hi_); }
  /// max(|lo|, |hi|).
  Rational mag() const;
  /// min |t| over the interval.
  Rational mig() const;

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool intersects(const Interval& other) const {
    return !(hi_ < other.lo_ || other.hi_ < lo_);
  }

  bool certainly_positive() const { return lo_.sign() > 0; }
  bool certainly_negative() const { return hi_.sign() < 0; }

  Interval hull_with(const Interval& other) const;
  std::optional<Interval> intersect(const Interval& other) const;

  /// Widens each endpoint outward to a multiple of 2^-bits.
  Interval round_outward(int bits) const;

  Interval abs() const;
  /// Exact range of t^n; negative n requires 0 outside the interval.
  Interval pow(long long n) const;

  Interval operator-() const { return Interval(-hi_, -lo_); }
  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  /// Throws DivisionByZeroInterval when 0 lies in rhs.
  Interval& operator/=(const Interval& rhs);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }

  friend bool operator==(const Interval& a, const Interval& b) = default;

  std::string to_string() const;

 private:
  Rational lo_;
  Rational hi_;
};

std::ostream& operator<<(std::ostream& out, const Interval& x);

/// Working precision of the transcendental kernels: enclosures of point
/// arguments have width at most 2^-(bits - 1).
class Precision {
 public:
  /// Throws InvalidArgument when bits < 1.
  explicit Precision(int bits);

  int bits() const { return bits_; }
  Precision doubled() const { return Precision(2 * bits_); }

  friend bool operator==(Precision, Precision) = default;

 private:
  int bits_;
};

}  // namespace limitless
