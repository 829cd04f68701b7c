#include "limitless/control/claim.hpp"

#include <algorithm>
#include <random>

#include "limitless/errors.hpp"
#include "limitless/expr/eval.hpp"

namespace limitless {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Certified: return "certified";
    case Status::Refuted: return "refuted";
    case Status::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ControlClaim::ControlClaim(FunctionSpec controlled, FunctionSpec control,
                           Interval domain)
    : controlled_(std::move(controlled)),
      control_(std::move(control)),
      domain_(std::move(domain)),
      pieces_{domain_} {
  if (!controlled_.domain().contains(domain_)) {
    throw InvalidArgument("claim domain " + domain_.to_string() +
                          " is not inside F's domain " +
                          controlled_.domain().to_string());
  }
  if (!control_.domain().contains(domain_)) {
    throw InvalidArgument("claim domain " + domain_.to_string() +
                          " is not inside f's domain " +
                          control_.domain().to_string());
  }
}

Interval difference_quotient(const FunctionSpec& F, const Rational& u,
                             const Rational& v, Precision prec) {
  if (u == v) throw InvalidArgument("difference quotient needs u != v");
  if (!F.domain().contains(u) || !F.domain().contains(v)) {
    throw InvalidArgument("difference quotient endpoints leave F's domain");
  }
  const auto fu = eval_exact(F.body(), u);
  const auto fv = eval_exact(F.body(), v);
  if (fu && fv) return Interval((*fv - *fu) / (v - u));
  const Interval a = fu ? Interval(*fu) : eval_enclosure(F.body(), Interval(u), prec);
  const Interval b = fv ? Interval(*fv) : eval_enclosure(F.body(), Interval(v), prec);
  return (b - a) / Interval(v - u);
}

namespace {

std::vector<Rational> candidate_points(const Rational& u, const Rational& v,
                                       int grid_n) {
  constexpr int kDyadicLevels = 8;
  std::vector<Rational> pts{u, v};
  const Rational w = v - u;
  for (int i = 1; i <= grid_n; ++i) {
    pts.push_back(u + w * Rational(i, grid_n + 1));
  }
  for (int k = 1; k <= kDyadicLevels; ++k) {
    const long long cells = 1LL << k;
    for (long long j = 1; j < cells; j += 2) {
      pts.push_back(u + w * Rational(j, cells));
    }
  }
  return pts;
}

struct Search {
  std::optional<std::pair<Rational, Interval>> p;
  std::optional<std::pair<Rational, Interval>> q;
  bool all_exact = true;
};

Search search_witness(const Expr& f, const Interval& dq,
                      const std::vector<Rational>& pts, Precision prec) {
  Search s;
  for (const Rational& x : pts) {
    Interval fx(Rational(0));
    try {
      fx = eval_point(f, x, prec);
    } catch (const EvalDomainError&) {
      s.all_exact = false;
      continue;
    }
    if (!fx.is_point()) s.all_exact = false;
    if (!s.p && fx.hi() <= dq.lo()) s.p.emplace(x, fx);
    if (!s.q && fx.lo() >= dq.hi()) s.q.emplace(x, fx);
    if (s.p && s.q) break;
  }
  return s;
}

BracketWitness make_witness(const Rational& u, const Rational& v,
                            const Interval& dq,
                            const std::pair<Rational, Interval>& p,
                            const std::pair<Rational, Interval>& q) {
  BracketWitness w{u, v, p.first, q.first, dq, p.second, q.second, false};
  w.strict = p.second.hi() < dq.lo() && dq.hi() < q.second.lo();
  return w;
}

Verdict check_direct(const ControlClaim& claim, const Rational& u,
                     const Rational& v, int grid_n, Precision prec) {
  const std::vector<Rational> pts = candidate_points(u, v, grid_n);
  for (Precision p : {prec, prec.doubled()}) {
    const Interval dq = difference_quotient(claim.controlled(), u, v, p);
    const Search s = search_witness(claim.control().body(), dq, pts, p);
    if (s.p && s.q) {
      return Verdict{Status::Certified, make_witness(u, v, dq, *s.p, *s.q), "",
                     p.bits()};
    }
    if (dq.is_point() && s.all_exact) break;
  }
  if (auto violation = refute_bracket(claim, u, v, prec)) {
    return Verdict{Status::Refuted, *violation,
                   "certified range of f misses the difference quotient",
                   violation->precision_bits};
  }
  return Verdict{Status::Inconclusive, std::monostate{},
                 "no witness among " + std::to_string(pts.size()) +
                     " candidate points and no certified range exclusion; "
                     "raise grid_n or precision",
                 prec.bits()};
}

const Interval* piece_containing(const ControlClaim& claim, const Rational& u,
                                 const Rational& v) {
  for (const Interval& piece : claim.pieces()) {
    if (piece.contains(Interval(u, v))) return &piece;
  }
  return nullptr;
}

// u = a_0 < a_1 < ... < a_k = v with each [a_i, a_i+1] inside one piece.
std::vector<Rational> chain_points(const ControlClaim& claim,
                                   const Rational& u, const Rational& v) {
  std::vector<Rational> chain{u};
  Rational at = u;
  while (at < v) {
    std::optional<Rational> reach;
    for (const Interval& piece : claim.pieces()) {
      if (piece.contains(at) && at < piece.hi() &&
          (!reach || piece.hi() > *reach)) {
        reach = piece.hi();
      }
    }
    if (!reach) throw InvalidArgument("pieces of a glued claim leave a gap");
    at = min(*reach, v);
    chain.push_back(at);
  }
  return chain;
}

Verdict check_glued(const ControlClaim& claim, const Rational& u,
                    const Rational& v, int grid_n, Precision prec) {
  const std::vector<Rational> chain = chain_points(claim, u, v);
  std::vector<std::pair<Rational, Interval>> values;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Verdict sub = check_direct(claim, chain[i], chain[i + 1], grid_n, prec);
    if (sub.status == Status::Refuted) {
      Verdict out = sub;
      out.note = "refuted on the piece segment [" + chain[i].to_string() +
                 ", " + chain[i + 1].to_string() + "]";
      return out;
    }
    if (sub.status != Status::Certified) {
      return check_direct(claim, u, v, grid_n, prec);
    }
    const auto& w = std::get<BracketWitness>(sub.payload);
    values.emplace_back(w.p, w.f_p);
    values.emplace_back(w.q, w.f_q);
  }
  // The quotient over [u, v] is a weighted mean of the segment quotients, so
  // it lies between the smallest and largest of the segment witnesses.
  const auto lowest = std::min_element(
      values.begin(), values.end(),
      [](const auto& a, const auto& b) { return a.second.hi() < b.second.hi(); });
  const auto highest = std::max_element(
      values.begin(), values.end(),
      [](const auto& a, const auto& b) { return a.second.lo() < b.second.lo(); });
  const Interval dq = difference_quotient(claim.controlled(), u, v, prec);
  if (lowest->second.hi() <= dq.lo() && dq.hi() <= highest->second.lo()) {
    std::string note = "combined from segments split at";
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
      note += " " + chain[i].to_string();
    }
    return Verdict{Status::Certified,
                   make_witness(u, v, dq, *lowest, *highest), note, prec.bits()};
  }
  return check_direct(claim, u, v, grid_n, prec);
}

Rational random_point(std::mt19937_64& rng, const Interval& domain) {
  const long long den =
      std::uniform_int_distribution<long long>(1, 1LL << 16)(rng);
  const long long num = std::uniform_int_distribution<long long>(0, den)(rng);
  return domain.lo() + domain.width() * Rational(num, den);
}

}  // namespace

Verdict check_bracket(const ControlClaim& claim, const Rational& u,
                      const Rational& v, int grid_n, Precision prec) {
  if (!(u < v)) throw InvalidArgument("check_bracket needs u < v");
  if (grid_n < 1) throw InvalidArgument("grid_n must be at least 1");
  if (!claim.domain().contains(Interval(u, v))) {
    throw InvalidArgument("[" + u.to_string() + ", " + v.to_string() +
                          "] is not inside the claim domain " +
                          claim.domain().to_string());
  }
  if (claim.pieces().size() == 1 || piece_containing(claim, u, v) != nullptr) {
    return check_direct(claim, u, v, grid_n, prec);
  }
  return check_glued(claim, u, v, grid_n, prec);
}

std::optional<Violation> refute_bracket(const ControlClaim& claim,
                                        const Rational& u, const Rational& v,
                                        Precision prec) {
  const Interval dq = difference_quotient(claim.controlled(), u, v, prec);
  for (int pieces : {1, 16}) {
    Interval range(Rational(0));
    try {
      range = range_enclosure(claim.control().body(), Interval(u, v), prec,
                              pieces);
    } catch (const EvalDomainError&) {
      continue;
    }
    if (range.hi() < dq.lo()) {
      return Violation{u, v, dq, range, Side::Below, prec.bits()};
    }
    if (range.lo() > dq.hi()) {
      return Violation{u, v, dq, range, Side::Above, prec.bits()};
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Rational, Rational>> subinterval_family(
    const Interval& domain, int count, std::uint64_t seed) {
  std::vector<std::pair<Rational, Rational>> out;
  if (domain.is_point() || count <= 0) return out;
  std::mt19937_64 rng(seed);
  long long level_cells = 1;
  long long cell = 0;
  while (static_cast<int>(out.size()) < count) {
    if (out.size() % 2 == 0) {
      const Rational step = domain.width() / Rational(level_cells);
      const Rational a = domain.lo() + step * Rational(cell);
      out.emplace_back(a, a + step);
      if (++cell == level_cells) {
        cell = 0;
        level_cells *= 2;
      }
    } else {
      Rational a = random_point(rng, domain);
      Rational b = random_point(rng, domain);
      while (a == b) b = random_point(rng, domain);
      if (b < a) std::swap(a, b);
      out.emplace_back(a, b);
    }
  }
  return out;
}

std::optional<Violation> falsify_control(const ControlClaim& claim, int budget,
                                         std::uint64_t seed, Precision prec) {
  if (budget < 1) throw InvalidArgument("budget must be at least 1");
  for (const auto& [u, v] : subinterval_family(claim.domain(), budget, seed)) {
    if (auto violation = refute_bracket(claim, u, v, prec)) return violation;
  }
  return std::nullopt;
}

ControlClaim glue_claims(const ControlClaim& a, const ControlClaim& b) {
  if (!(a.controlled().body() == b.controlled().body()) ||
      !(a.control().body() == b.control().body())) {
    throw InvalidArgument("glued claims must share F and f");
  }
  if (!a.domain().intersect(b.domain())) throw DisjointDomains();
  const Interval joined = a.domain().hull_with(b.domain());
  ControlClaim out(FunctionSpec(a.controlled().body(), joined),
                   FunctionSpec(a.control().body(), joined), joined);
  out.pieces_ = a.pieces_;
  out.pieces_.insert(out.pieces_.end(), b.pieces_.begin(), b.pieces_.end());
  std::sort(out.pieces_.begin(), out.pieces_.end(),
            [](const Interval& x, const Interval& y) {
              return x.lo() < y.lo() || (x.lo() == y.lo() && x.hi() < y.hi());
            });
  return out;
}

}  // namespace limitless
