#include "limitless/lipschitz/lipschitz.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>

#include "limitless/control/claim.hpp"
#include "limitless/errors.hpp"
#include "limitless/expr/derivative.hpp"
#include "limitless/expr/eval.hpp"

namespace limitless {

std::string_view method_name(LipschitzMethod m) {
  switch (m) {
    case LipschitzMethod::DerivativeRange: return "derivative-range";
    case LipschitzMethod::SyntacticRule: return "syntactic-rule";
    case LipschitzMethod::UserSupplied: return "user-supplied";
  }
  return "?";
}

namespace {

bool is_binary(Op op) {
  return op == Op::Add || op == Op::Sub || op == Op::Mul || op == Op::Div;
}

bool has_sgn_of_var(const Expr& e) {
  if (!e.has_var()) return false;
  if (e.op() == Op::Const || e.op() == Op::Var) return false;
  if (e.op() == Op::Sgn) return true;
  if (has_sgn_of_var(e.lhs())) return true;
  return is_binary(e.op()) && has_sgn_of_var(e.rhs());
}

// Largest |d| over `pieces` equal cells of x; empty if some cell cannot be
// enclosed.
std::optional<Rational> derivative_bound(const Expr& d, const Interval& x,
                                         long long pieces, Precision prec) {
  const Rational step = x.width() / Rational(pieces);
  Rational best;
  for (long long i = 0; i < pieces; ++i) {
    const Rational a = x.lo() + step * Rational(i);
    const Rational b = i + 1 == pieces ? x.hi() : a + step;
    try {
      best = max(best, eval_enclosure(d, Interval(a, b), prec).mag());
    } catch (const EvalDomainError&) {
      return std::nullopt;
    }
  }
  return best;
}

}  // namespace

LipschitzResult lipschitz_bound(const FunctionSpec& fn, const Interval& domain,
                                Precision prec, LipschitzOptions opts) {
  if (!fn.domain().contains(domain)) {
    throw InvalidArgument(domain.to_string() + " is outside the domain " +
                          fn.domain().to_string());
  }
  const Expr& body = fn.body();
  if (!body.has_var()) {
    return LipschitzCert{body, domain, Rational(0),
                         LipschitzMethod::SyntacticRule, 1};
  }
  if (has_sgn_of_var(body)) {
    return NotLipschitz{"sgn of a non-constant argument jumps"};
  }
  const std::optional<Expr> d = symbolic_derivative(body);
  if (!d) return NotLipschitz{"no derivative available"};
  if (domain.is_point()) {
    return LipschitzCert{body, domain, Rational(0),
                         LipschitzMethod::SyntacticRule, 1};
  }

  std::optional<Rational> best;
  long long best_pieces = 1;
  std::optional<Rational> previous;
  for (int level = 0; level <= opts.max_level; ++level) {
    const long long pieces = 1LL << level;
    const auto bound = derivative_bound(*d, domain, pieces, prec);
    if (!bound) continue;
    if (!best || *bound < *best) {
      best = bound;
      best_pieces = pieces;
    }
    // Stop once another halving gains less than 1/64 of the bound.
    if (previous && level >= 2 &&
        (*previous - *bound) * Rational(64) <= *previous) {
      break;
    }
    previous = bound;
  }
  if (!best) {
    return NotLipschitz{"derivative cannot be enclosed near a singular point "
                        "of " + domain.to_string()};
  }
  if (*best > opts.cap) {
    return NotLipschitz{"derivative bound " + best->to_string() +
                        " exceeds the cap; unbounded within budget"};
  }
  return LipschitzCert{body, domain, *best, LipschitzMethod::DerivativeRange,
                       best_pieces};
}

LipschitzCert user_lipschitz(const FunctionSpec& fn, const Interval& domain,
                             const Rational& M) {
  if (M.sign() < 0) throw InvalidArgument("Lipschitz constant must be >= 0");
  return LipschitzCert{fn.body(), domain, M, LipschitzMethod::UserSupplied, 1};
}

namespace {

Rational random_in(std::mt19937_64& rng, const Rational& lo,
                   const Rational& hi) {
  const long long den =
      std::uniform_int_distribution<long long>(1, 1LL << 16)(rng);
  const long long num = std::uniform_int_distribution<long long>(0, den)(rng);
  return lo + (hi - lo) * Rational(num, den);
}

enum class Check { Pass, Fail, Undecided };

Check compare(const Interval& lhs, const Rational& rhs) {
  if (lhs.hi() <= rhs) return Check::Pass;
  if (lhs.lo() > rhs) return Check::Fail;
  return Check::Undecided;
}

std::vector<std::pair<Rational, Rational>> linqun_pairs(const Interval& domain,
                                                        int sample_n,
                                                        std::uint64_t seed) {
  constexpr int kShrinkLevels = 64;
  std::vector<std::pair<Rational, Rational>> pairs;
  if (domain.is_point()) return pairs;
  const int wanted = std::max(1, sample_n / 4);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

  std::vector<Rational> centres{domain.mid()};
  if (domain.contains(Rational(0)) && !domain.mid().is_zero()) {
    centres.emplace_back(0);
  }
  centres.push_back(random_in(rng, domain.lo(), domain.hi()));

  std::vector<std::pair<Rational, Rational>> shrinking;
  for (const Rational& c : centres) {
    Rational t = domain.width() / Rational(2);
    for (int k = 0; k < kShrinkLevels; ++k, t = t / Rational(2)) {
      if (domain.contains(c - t) && domain.contains(c + t)) {
        shrinking.emplace_back(c - t, c + t);
      } else if (domain.contains(c + t)) {
        shrinking.emplace_back(c, c + t);
      } else if (domain.contains(c - t)) {
        shrinking.emplace_back(c - t, c);
      }
    }
  }
  const int shrink_count =
      std::min<int>(static_cast<int>(shrinking.size()), wanted / 2);
  pairs = subinterval_family(domain, std::max(1, wanted - shrink_count), seed);
  pairs.insert(pairs.end(), shrinking.begin(), shrinking.begin() + shrink_count);
  return pairs;
}

}  // namespace

std::vector<LinqunSample> linqun_samples(const Interval& domain, int sample_n,
                                         std::uint64_t seed) {
  if (sample_n < 1) throw InvalidArgument("sample_n must be at least 1");
  std::vector<LinqunSample> out;
  std::mt19937_64 rng(seed);
  for (const auto& [u, v] : linqun_pairs(domain, sample_n, seed)) {
    out.push_back({u, v, u});
    out.push_back({u, v, v});
    out.push_back({u, v, (u + v) / Rational(2)});
    out.push_back({u, v, random_in(rng, u, v)});
  }
  return out;
}

LinqunResult check_linqun(const FunctionSpec& f, const FunctionSpec& g,
                          const Interval& domain, const Rational& M,
                          int sample_n, Precision prec, std::uint64_t seed) {
  if (!f.domain().contains(domain) || !g.domain().contains(domain)) {
    throw InvalidArgument(domain.to_string() +
                          " is outside the function domains");
  }
  LinqunReport report{domain, M, 0, 0, Rational(0)};
  std::optional<Rational> worst;
  std::optional<std::pair<Rational, Rational>> cached;
  Interval fu(Rational(0));
  Interval fv(Rational(0));
  for (const LinqunSample& t : linqun_samples(domain, sample_n, seed)) {
    if (!cached || cached->first != t.u || cached->second != t.v) {
      fu = eval_point(f.body(), t.u, prec);
      fv = eval_point(f.body(), t.v, prec);
      cached.emplace(t.u, t.v);
    }
    const Interval gs = eval_point(g.body(), t.s, prec);
    const Rational h = t.v - t.u;
    const Interval rise = fv - fu;

    const Interval quotient_lhs = (rise / Interval(h) - gs).abs();
    const Rational quotient_rhs = M * h;
    const Interval product_lhs = (rise - gs * Interval(h)).abs();
    const Rational product_rhs = M * h * h;

    const Check a = compare(quotient_lhs, quotient_rhs);
    const Check b = compare(product_lhs, product_rhs);
    if ((a == Check::Pass && b == Check::Fail) ||
        (a == Check::Fail && b == Check::Pass)) {
      throw std::logic_error("quotient and product forms disagree at u = " +
                             t.u.to_string() + ", v = " + t.v.to_string());
    }
    ++report.samples_checked;
    if (a == Check::Fail || b == Check::Fail) {
      Rational gap = quotient_lhs.lo() - quotient_rhs;
      gap = max(gap, (product_lhs.lo() - product_rhs) / h);
      return LinqunCounterexample{t.u, t.v, t.s, quotient_lhs, quotient_rhs,
                                  gap};
    }
    if (a == Check::Undecided && b == Check::Undecided) {
      ++report.undecided;
      continue;
    }
    const Rational slack = a == Check::Pass
                               ? quotient_rhs - quotient_lhs.hi()
                               : (product_rhs - product_lhs.hi()) / h;
    worst = worst ? min(*worst, slack) : slack;
  }
  report.worst_slack = worst.value_or(Rational(0));
  return report;
}

Verdict control_is_2M_lipschitz(const FunctionSpec& f, const FunctionSpec& g,
                                const Interval& domain, const Rational& M,
                                int sample_n, Precision prec,
                                std::uint64_t seed) {
  const LinqunResult premise = check_linqun(f, g, domain, M, sample_n, prec, seed);
  if (const auto* cx = std::get_if<LinqunCounterexample>(&premise)) {
    return Verdict{Status::Inconclusive, std::monostate{},
                   "premise missing: the Linqun inequality fails at u = " +
                       cx->u.to_string() + ", v = " + cx->v.to_string() +
                       ", s = " + cx->s.to_string(),
                   prec.bits()};
  }
  const auto& report = std::get<LinqunReport>(premise);
  if (!report.passed()) {
    return Verdict{Status::Inconclusive, std::monostate{},
                   "premise missing: " + std::to_string(report.undecided) +
                       " Linqun samples undecided",
                   prec.bits()};
  }
  const Rational bound = Rational(2) * M;
  int pairs = 0;
  int undecided = 0;
  for (const auto& [u, v] : linqun_pairs(domain, sample_n, seed)) {
    const Interval lhs =
        (eval_point(g.body(), v, prec) - eval_point(g.body(), u, prec)).abs();
    const Rational rhs = bound * (v - u);
    ++pairs;
    switch (compare(lhs, rhs)) {
      case Check::Pass: break;
      case Check::Undecided: ++undecided; break;
      case Check::Fail:
        return Verdict{Status::Refuted, PairViolation{u, v, lhs, rhs},
                       "|g(v) - g(u)| > 2M |v - u|, so the Linqun premise is "
                       "false as well",
                       prec.bits()};
    }
  }
  if (undecided > 0) {
    return Verdict{Status::Inconclusive, std::monostate{},
                   std::to_string(undecided) + " of " + std::to_string(pairs) +
                       " pairs undecided",
                   prec.bits()};
  }
  return Verdict{Status::Certified, std::monostate{},
                 "|g(v) - g(u)| <= 2M |v - u| on " + std::to_string(pairs) +
                     " pairs",
                 prec.bits()};
}

namespace {

enum class Want { Low, High };

struct GapCell {
  Rational r;
  Rational s;
  Interval quotient;
  Rational d;
};

struct CellSearch {
  std::optional<GapCell> cell;
  bool constant = true;
};

CellSearch find_gap_cell(const FunctionSpec& f, const Rational& u,
                         const Rational& v, const Interval& dq, Want want,
                         Precision prec, int depth) {
  CellSearch out;
  for (int level = 1; level <= depth; ++level) {
    const long long cells = 1LL << level;
    const Rational step = (v - u) / Rational(cells);
    std::optional<GapCell> extreme;
    for (long long i = 0; i < cells; ++i) {
      const Rational a = u + step * Rational(i);
      const Rational b = a + step;
      const Interval q = difference_quotient(f, a, b, prec);
      if (!(q.is_point() && dq.is_point() && q.lo() == dq.lo())) {
        out.constant = false;
      }
      const Rational d = want == Want::Low ? dq.lo() - q.hi() : q.lo() - dq.hi();
      if (!extreme || d > extreme->d) extreme = GapCell{a, b, q, d};
    }
    if (extreme->d.sign() > 0) {
      out.cell = extreme;
      return out;
    }
  }
  return out;
}

// Left end of the piece of [r, s] whose quotient is smallest (Low) or
// largest (High), with the number of pieces used.
std::pair<Rational, long long> scan_pieces(const FunctionSpec& f,
                                           const GapCell& cell,
                                           const Rational& M, Want want,
                                           Precision prec) {
  constexpr long kMaxPieces = 1L << 16;
  // n > M (s - r)/d, so M h < d.
  BigInt n = (M * (cell.s - cell.r) / cell.d).floor() + 1;
  if (n > kMaxPieces) n = kMaxPieces;
  const long long pieces = n.get_si();
  const Rational h = (cell.s - cell.r) / Rational(pieces);
  std::optional<std::pair<Rational, Interval>> best;
  for (long long i = 0; i < pieces; ++i) {
    const Rational a = cell.r + h * Rational(i);
    const Interval q = difference_quotient(f, a, a + h, prec);
    const bool better =
        !best || (want == Want::Low ? q.hi() < best->second.hi()
                                    : q.lo() > best->second.lo());
    if (better) best.emplace(a, q);
  }
  return {best->first, pieces};
}

}  // namespace

SubdivisionBracket find_bracket_by_subdivision(const FunctionSpec& f,
                                               const FunctionSpec& g,
                                               const Rational& M,
                                               const Rational& u,
                                               const Rational& v,
                                               Precision prec, int depth) {
  if (!(u < v)) throw InvalidArgument("subdivision search needs u < v");
  if (M.sign() < 0) throw InvalidArgument("M must be >= 0");
  const Interval span(u, v);
  if (!f.domain().contains(span) || !g.domain().contains(span)) {
    throw InvalidArgument(span.to_string() + " is outside the function domains");
  }
  const Interval dq = difference_quotient(f, u, v, prec);

  auto side = [&](Want want) -> std::pair<Rational, std::string> {
    const CellSearch search = find_gap_cell(f, u, v, dq, want, prec, depth);
    if (search.cell) {
      const auto [point, pieces] = scan_pieces(f, *search.cell, M, want, prec);
      return {point, "subdivision of [" + search.cell->r.to_string() + ", " +
                         search.cell->s.to_string() + "] into " +
                         std::to_string(pieces) + " pieces"};
    }
    if (search.constant) return {u, "constant quotient"};
    throw SearchExhausted(
        "no subinterval with a certified quotient gap within " +
        std::to_string(depth) + " dyadic levels");
  };

  const auto [p, p_route] = side(Want::Low);
  const auto [q, q_route] = side(Want::High);
  const Interval gp = eval_point(g.body(), p, prec);
  const Interval gq = eval_point(g.body(), q, prec);
  if (!(gp.hi() <= dq.lo())) {
    throw HypothesisViolated("g(" + p.to_string() + ") = " + gp.to_string() +
                             " is not <= the quotient " + dq.to_string());
  }
  if (!(dq.hi() <= gq.lo())) {
    throw HypothesisViolated("g(" + q.to_string() + ") = " + gq.to_string() +
                             " is not >= the quotient " + dq.to_string());
  }
  return SubdivisionBracket{p, q, dq, gp, gq, p_route, q_route};
}

}  // namespace limitless
