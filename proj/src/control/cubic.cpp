#include "limitless/control/cubic.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "limitless/errors.hpp"

namespace limitless {

namespace {

// Polynomial in (u, v): (power of u, power of v) -> coefficient.
class Poly {
 public:
  Poly() = default;
  static Poly constant(const Rational& c) {
    Poly p;
    p.add_term(0, 0, c);
    return p;
  }
  static Poly u() {
    Poly p;
    p.add_term(1, 0, Rational(1));
    return p;
  }
  static Poly v() {
    Poly p;
    p.add_term(0, 1, Rational(1));
    return p;
  }

  friend Poly operator+(Poly a, const Poly& b) {
    for (const auto& [k, c] : b.terms_) a.add_term(k.first, k.second, c);
    return a;
  }
  friend Poly operator-(Poly a, const Poly& b) {
    for (const auto& [k, c] : b.terms_) a.add_term(k.first, k.second, -c);
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
      }
    }
    return out;
  }

  // Number of monomials compared when checking a == b.
  static int compare(const Poly& a, const Poly& b, bool& equal) {
    std::map<std::pair<int, int>, int> keys;
    for (const auto& [k, c] : a.terms_) keys[k] = 0;
    for (const auto& [k, c] : b.terms_) keys[k] = 0;
    equal = a.terms_ == b.terms_;
    return static_cast<int>(keys.size());
  }

 private:
  void add_term(int i, int j, const Rational& c) {
    const auto key = std::make_pair(i, j);
    Rational sum = terms_[key] + c;
    if (sum.is_zero()) {
      terms_.erase(key);
    } else {
      terms_[key] = sum;
    }
  }

  std::map<std::pair<int, int>, Rational> terms_;
};

}  // namespace

Verdict cubic_control_certificate(const Rational& a, const Rational& b,
                                  const Rational& c, const Interval& window) {
  const Poly u = Poly::u();
  const Poly v = Poly::v();
  const Poly A = Poly::constant(a);
  const Poly B = Poly::constant(b);
  const Poly C = Poly::constant(c);
  const Rational split = -a / Rational(3);
  const Poly S = Poly::constant(split);

  auto F = [&](const Poly& t) { return t * t * t + A * t * t + B * t + C; };
  auto g = [&](const Poly& t) {
    return Poly::constant(Rational(3)) * t * t +
           Poly::constant(Rational(2)) * A * t + B;
  };
  const Poly D = v * v + u * v + u * u + A * (u + v) + B;
  const Poly two = Poly::constant(Rational(2));

  struct Identity {
    const char* text;
    Poly lhs;
    Poly rhs;
  };
  const Identity identities[] = {
      {"F(v) - F(u) = (v - u)*D with D = v^2 + u*v + u^2 + a*(u + v) + b",
       F(v) - F(u), (v - u) * D},
      {"D - g(u) = (v - u)*(v + 2*u + a)", D - g(u), (v - u) * (v + two * u + A)},
      {"g(v) - D = (v - u)*(2*v + u + a)", g(v) - D, (v - u) * (two * v + u + A)},
      {"v + 2*u + a = (v - s) + 2*(u - s) with s = -a/3", v + two * u + A,
       (v - S) + two * (u - S)},
      {"2*v + u + a = 2*(v - s) + (u - s) with s = -a/3", two * v + u + A,
       two * (v - S) + (u - S)},
  };

  CubicCertificate cert{a, b, c, split, window, {}, 0};
  for (const Identity& id : identities) {
    bool equal = false;
    cert.coefficients_compared += Poly::compare(id.lhs, id.rhs, equal);
    if (!equal) {
      throw std::logic_error(std::string("cubic identity failed: ") + id.text);
    }
    cert.identities.emplace_back(id.text);
  }
  return Verdict{Status::Certified, cert,
                 "p = u, q = v on [s, inf); p = v, q = u on (-inf, s]; glued at "
                 "s = " + split.to_string(),
                 0};
}

ControlClaim cubic_claim(const Rational& a, const Rational& b,
                         const Rational& c, const Interval& window) {
  const Expr x = Expr::var();
  auto k = [](const Rational& r) { return Expr::constant(r); };
  const Expr F = Expr::add(
      Expr::add(Expr::add(Expr::pow(x, 3), Expr::mul(k(a), Expr::pow(x, 2))),
                Expr::mul(k(b), x)),
      k(c));
  const Expr g = Expr::add(
      Expr::add(Expr::mul(k(Rational(3)), Expr::pow(x, 2)),
                Expr::mul(k(Rational(2) * a), x)),
      k(b));
  const Rational split = -a / Rational(3);
  auto make = [&](const Interval& d) {
    return ControlClaim(FunctionSpec(F, d), FunctionSpec(g, d), d);
  };
  if (split <= window.lo() || split >= window.hi()) return make(window);
  return glue_claims(make(Interval(window.lo(), split)),
                     make(Interval(split, window.hi())));
}

}  // namespace limitless
