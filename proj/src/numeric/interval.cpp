#include "limitless/numeric/interval.hpp"

#include <algorithm>
#include <array>
#include <ostream>

#include "limitless/errors.hpp"

namespace limitless {

Interval::Interval(Rational point) : lo_(point), hi_(std::move(point)) {}

Interval::Interval(Rational lo, Rational hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw InvalidArgument("interval with lo > hi: [" + lo_.to_string() + ", " +
                          hi_.to_string() + "]");
  }
}

Interval Interval::hull(const Rational& a, const Rational& b) {
  return a < b ? Interval(a, b) : Interval(b, a);
}

Rational Interval::mag() const { return max(lo_.abs(), hi_.abs()); }

Rational Interval::mig() const {
  if (contains_zero()) return Rational(0);
  return min(lo_.abs(), hi_.abs());
}

Interval Interval::hull_with(const Interval& other) const {
  return Interval(min(lo_, other.lo_), max(hi_, other.hi_));
}

std::optional<Interval> Interval::intersect(const Interval& other) const {
  if (!intersects(other)) return std::nullopt;
  return Interval(max(lo_, other.lo_), min(hi_, other.hi_));
}

Interval Interval::round_outward(int bits) const {
  return Interval(lo_.floor_dyadic(bits), hi_.ceil_dyadic(bits));
}

Interval Interval::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  return Interval(Rational(0), max(-lo_, hi_));
}

Interval Interval::pow(long long n) const {
  if (n == 0) return Interval(Rational(1));
  if (n < 0) {
    if (contains_zero()) throw DivisionByZeroInterval();
    return Interval(Rational(1)) / pow(-n);
  }
  if (n % 2 == 1) return Interval(lo_.pow(n), hi_.pow(n));
  const Interval a = abs();
  return Interval(a.lo_.pow(n), a.hi_.pow(n));
}

Interval& Interval::operator+=(const Interval& rhs) {
  lo_ += rhs.lo_;
  hi_ += rhs.hi_;
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  Rational lo = lo_ - rhs.hi_;
  hi_ -= rhs.lo_;
  lo_ = std::move(lo);
  return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
  if (is_point() && rhs.is_point()) {
    lo_ *= rhs.lo_;
    hi_ = lo_;
    return *this;
  }
  std::array<Rational, 4> p{lo_ * rhs.lo_, lo_ * rhs.hi_, hi_ * rhs.lo_,
                            hi_ * rhs.hi_};
  auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  Rational lo = *mn;
  hi_ = *mx;
  lo_ = std::move(lo);
  return *this;
}

Interval& Interval::operator/=(const Interval& rhs) {
  if (rhs.contains_zero()) throw DivisionByZeroInterval();
  return *this *= Interval(rhs.hi_.reciprocal(), rhs.lo_.reciprocal());
}

std::string Interval::to_string() const {
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

std::ostream& operator<<(std::ostream& out, const Interval& x) {
  return out << x.to_string();
}

Precision::Precision(int bits) : bits_(bits) {
  if (bits < 1) throw InvalidArgument("precision bits must be >= 1");
}

}  // namespace limitless
