#include "limitless/numeric/rational.hpp"

#include <cctype>
#include <ostream>

#include "limitless/errors.hpp"

namespace limitless {

namespace {

static_assert(sizeof(long) == sizeof(long long),
              "gmpxx lacks long long constructors; LP64 assumed");

BigInt from_ll(long long v) { return BigInt(static_cast<long>(v)); }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long value) : value_(from_ll(value)) {}

Rational::Rational(const BigInt& integer) : value_(integer) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(from_ll(num), from_ll(den)) {}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    result = Rational(BigInt(std::string(num), 10), BigInt(std::string(den), 10));
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw InvalidArgument("malformed decimal '" + std::string(text) + "'");
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigInt digits(std::string(whole.empty() ? "0" : whole) +
                      std::string(frac),
                  10);
    result = Rational(digits, scale);
  } else {
    if (!all_digits(body)) {
      throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    }
    result = Rational(BigInt(std::string(body), 10));
  }
  return negative ? -result : result;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(long long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  // Powers of coprime integers stay coprime.
  mpq_class out;
  mpz_swap(out.get_num_mpz_t(), num.get_mpz_t());
  mpz_swap(out.get_den_mpz_t(), den.get_mpz_t());
  return Rational(std::move(out));
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::floor_dyadic(int bits) const {
  mpq_class scaled = value_;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), bits);
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  mpq_class out(q);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
  return Rational(std::move(out));
}

Rational Rational::ceil_dyadic(int bits) const {
  mpq_class scaled = value_;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), bits);
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  mpq_class out(q);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
  return Rational(std::move(out));
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (mpz_perfect_square_p(value_.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(value_.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  BigInt num;
  BigInt den;
  mpz_sqrt(num.get_mpz_t(), value_.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), value_.get_den_mpz_t());
  return Rational(num, den);
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) +
         mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

std::string Rational::to_string() const { return value_.get_str(); }

std::string Rational::to_decimal(int digits) const {
  const BigInt& num = value_.get_num();
  const BigInt& den = value_.get_den();
  BigInt abs_num = ::abs(num);
  BigInt whole = abs_num / den;
  BigInt rem = abs_num % den;
  std::string out = (num < 0 ? "-" : "") + whole.get_str();
  if (digits > 0 && rem != 0) {
    out += '.';
    for (int i = 0; i < digits && rem != 0; ++i) {
      rem *= 10;
      BigInt d = rem / den;
      rem %= den;
      out += d.get_str();
    }
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& out, const Rational& r) {
  return out << r.to_string();
}

}  // namespace limitless
