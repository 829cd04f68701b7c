#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace limitless {

using BigInt = mpz_class;

/// Exact fraction in canonical form: positive denominator, gcd(|num|, den) = 1.
///
/// Every certified comparison in the library bottoms out in one of these.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& integer);
  /// Throws DivisionByZero when `den` is zero.
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den);

  /// Accepts "p", "-p", "p/q", and finite decimals such as "0.125" or "-2.5".
  /// Throws InvalidArgument on anything else.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  /// Throws DivisionByZero for zero.
  Rational reciprocal() const;
  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long long exponent) const;

  BigInt floor() const;
  BigInt ceil() const;

  /// Largest m / 2^bits that is <= *this.
  Rational floor_dyadic(int bits) const;
  /// Smallest m / 2^bits that is >= *this.
  Rational ceil_dyadic(int bits) const;

  /// The rational square root when one exists; empty otherwise (including
  /// for negative values).
  std::optional<Rational> exact_sqrt() const;

  /// Bits needed for numerator plus denominator; a size proxy.
  std::size_t bit_size() const;

  /// "p" or "p/q". The canonical exact text form.
  std::string to_string() const;
  /// Truncated decimal expansion with `digits` fractional digits. For display
  /// only; never used in a certified comparison.
  std::string to_decimal(int digits = 12) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) {
    return lhs += rhs;
  }
  friend Rational operator-(Rational lhs, const Rational& rhs) {
    return lhs -= rhs;
  }
  friend Rational operator*(Rational lhs, const Rational& rhs) {
    return lhs *= rhs;
  }
  friend Rational operator/(Rational lhs, const Rational& rhs) {
    return lhs /= rhs;
  }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& out, const Rational& r);

inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}
inline Rational midpoint(const Rational& a, const Rational& b) {
  return (a + b) / Rational(2);
}

}  // namespace limitless
