#include "limitless/numeric/enclosure.hpp"

#include <map>
#include <mutex>

#include "limitless/errors.hpp"

namespace limitless {

namespace {

Rational pow2(int e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

BigInt isqrt(const BigInt& n) {
  BigInt s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  return s;
}

// Interval enclosing atan(1/m) for integer m >= 2, width <= 2 * 2^-bits.
Interval arctan_inverse(long m, int bits) {
  const Rational tol = pow2(-bits);
  const Rational inv_m2 = Rational(1, m * m);
  Rational power = Rational(1, m);  // m^-(2n+1)
  Rational sum;
  for (long n = 0;; ++n) {
    const Rational term = power / Rational(2 * n + 1);
    if (term <= tol) {
      // Alternating series with decreasing terms: the remainder is bounded
      // by the first omitted term.
      return Interval(sum - term, sum + term);
    }
    sum += (n % 2 == 0) ? term : -term;
    power *= inv_m2;
  }
}

Interval compute_pi(int bits) {
  const int work = bits + 8;
  const Interval a = arctan_inverse(5, work);
  const Interval b = arctan_inverse(239, work);
  const Interval pi = Interval(Rational(16)) * a - Interval(Rational(4)) * b;
  return pi.round_outward(bits + 1);
}

// sin(y) or cos(y) for |y| <= 1 with remainder <= 2^-bits on each side.
Interval taylor_point(const Rational& y, Trig fn, int bits) {
  const Rational tol = pow2(-bits);
  const Rational y2 = y * y;
  Rational term = fn == Trig::Sin ? y : Rational(1);
  long k = fn == Trig::Sin ? 1 : 0;  // degree of `term`
  Rational sum;
  for (long n = 0;; ++n) {
    if (term.abs() <= tol) {
      const Rational r = term.abs();
      return Interval(sum - r, sum + r);
    }
    sum += (n % 2 == 0) ? term : -term;
    term *= y2 / Rational((k + 1) * (k + 2));
    k += 2;
  }
}

// Range over a reduced argument r with |r| < 1.
Interval reduced_range(const Interval& r, Trig fn, int bits) {
  if (fn == Trig::Sin) {
    // sin is increasing on [-1, 1].
    return Interval(taylor_point(r.lo(), fn, bits).lo(),
                    taylor_point(r.hi(), fn, bits).hi());
  }
  const Interval at_lo = taylor_point(r.lo(), fn, bits);
  const Interval at_hi = taylor_point(r.hi(), fn, bits);
  if (r.contains_zero()) {
    return Interval(min(at_lo.lo(), at_hi.lo()), Rational(1));
  }
  if (r.lo().sign() > 0) return Interval(at_hi.lo(), at_lo.hi());
  return Interval(at_lo.lo(), at_hi.hi());
}

std::size_t bit_length(const BigInt& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

const Interval kUnit(Rational(-1), Rational(1));

Interval clamp_unit(const Interval& x) {
  // The true value always lies in [-1, 1], so the intersection is non-empty.
  return *x.intersect(kUnit);
}

Interval trig_point(const Rational& t, Trig fn, int bits) {
  if (t.is_zero()) {
    return Interval(Rational(fn == Trig::Sin ? 0 : 1));
  }
  // Quadrant k = round(2t / pi); any integer works for soundness, the choice
  // only has to keep |r| below 1.
  const Interval pi_coarse =
      pi_enclosure(64 + static_cast<int>(bit_length(t.abs().floor())));
  const Rational ratio = Rational(2) * t / pi_coarse.mid();
  const BigInt k = (ratio + Rational(1, 2)).floor();

  const int pi_bits = bits + 6 + static_cast<int>(bit_length(::abs(k)));
  const Interval half_pi = pi_enclosure(pi_bits) / Interval(Rational(2));
  const Interval r =
      (Interval(t) - Interval(Rational(k)) * half_pi).round_outward(bits + 6);

  BigInt q;
  mpz_fdiv_r_ui(q.get_mpz_t(), k.get_mpz_t(), 4);
  const long quadrant = q.get_si();

  // sin(r + k pi/2), cos(r + k pi/2) by quadrant.
  Trig base = fn;
  bool negate = false;
  if (fn == Trig::Sin) {
    base = (quadrant % 2 == 0) ? Trig::Sin : Trig::Cos;
    negate = quadrant >= 2;
  } else {
    base = (quadrant % 2 == 0) ? Trig::Cos : Trig::Sin;
    negate = quadrant == 1 || quadrant == 2;
  }
  Interval value = reduced_range(r, base, bits + 6);
  if (negate) value = -value;
  return clamp_unit(value.round_outward(bits + 2));
}

}  // namespace

Interval pi_enclosure(int bits) {
  static std::mutex mutex;
  static std::map<int, Interval> cache;
  const int key = ((bits + 31) / 32) * 32;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_pi(key)).first;
  return it->second;
}

Interval sqrt_enclosure(const Interval& x, Precision prec) {
  if (x.lo().sign() < 0) {
    throw DomainError("sqrt of interval with negative part " + x.to_string());
  }
  const int k = prec.bits();
  const Rational scale = pow2(2 * k);
  const Rational unit = pow2(-k);

  const BigInt lo_root = isqrt((x.lo() * scale).floor());
  const BigInt hi_arg = (x.hi() * scale).ceil();
  BigInt hi_root = isqrt(hi_arg);
  if (hi_root * hi_root != hi_arg) hi_root += 1;

  return Interval(Rational(lo_root) * unit, Rational(hi_root) * unit);
}

Interval sincos_enclosure(const Interval& x, Trig fn, Precision prec) {
  const int bits = prec.bits();
  if (x.is_point()) return trig_point(x.lo(), fn, bits);

  const Interval two_pi = pi_enclosure(64) * Interval(Rational(2));
  if (x.width() >= two_pi.lo()) return kUnit;

  Interval result = trig_point(x.lo(), fn, bits).hull_with(
      trig_point(x.hi(), fn, bits));

  // Interior extrema sit at offset + j*pi: offset pi/2 for sin, 0 for cos;
  // the extremum is +1 for even j and -1 for odd j.
  const Rational pi_mid =
      pi_enclosure(64 + static_cast<int>(bit_length(x.mag().floor()))).mid();
  const Rational shift = fn == Trig::Sin ? Rational(1, 2) : Rational(0);
  const BigInt j_lo = (x.lo() / pi_mid - shift).floor() - 1;
  const BigInt j_hi = (x.hi() / pi_mid - shift).ceil() + 1;
  const int pi_bits =
      bits + 8 +
      static_cast<int>(std::max(bit_length(::abs(j_lo)), bit_length(::abs(j_hi))));
  const Interval pi = pi_enclosure(pi_bits);
  for (BigInt j = j_lo; j <= j_hi; ++j) {
    const Interval critical = pi * Interval(Rational(j) + shift);
    if (!critical.intersects(x)) continue;
    const bool even = mpz_even_p(j.get_mpz_t()) != 0;
    result = result.hull_with(Interval(Rational(even ? 1 : -1)));
  }
  return clamp_unit(result);
}

}  // namespace limitless
