#include "limitless/cli/cli.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "limitless/control/claim.hpp"
#include "limitless/control/cubic.hpp"
#include "limitless/control/shape.hpp"
#include "limitless/errors.hpp"
#include "limitless/expr/parser.hpp"
#include "limitless/integral/integral.hpp"
#include "limitless/lipschitz/lipschitz.hpp"
#include "limitless/report/report.hpp"

namespace limitless {

namespace {

struct RunConfig {
  int precision_bits = 64;
  int grid_n = 64;
  int budget = 1000;
  std::uint64_t seed = 0;
  std::string output = "text";
  std::string window;

  Precision prec() const { return Precision(precision_bits); }
};

void add_config(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--precision-bits", cfg.precision_bits,
                  "working precision of irrational enclosures")
      ->envname("LIMITLESS_PRECISION_BITS")
      ->check(CLI::Range(8, 1 << 16));
  cmd->add_option("--grid-n", cfg.grid_n, "interior grid points per check")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", cfg.budget, "subintervals to examine")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "seed for the sampled subintervals");
  cmd->add_option("--output", cfg.output, "text, json or csv-plot")
      ->check(CLI::IsMember({"text", "json", "csv-plot"}));
  cmd->add_option("--window", cfg.window,
                  "lo,hi bounded window for unbounded domains");
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) parts.push_back(part);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  return parts;
}

Rational rational_arg(const std::string& text, const char* what) {
  try {
    return Rational::parse(text);
  } catch (const InvalidArgument&) {
    throw InvalidArgument(std::string(what) + ": '" + text +
                          "' is not a rational number");
  }
}

std::vector<Rational> rational_list(const std::string& text, const char* what) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (const std::string& part : split_commas(text)) {
    out.push_back(rational_arg(part, what));
  }
  return out;
}

// "lo,hi" where either end may be -inf / inf; infinite ends are replaced by
// the window's.
Interval domain_arg(const std::string& text, const std::string& window,
                    const char* what) {
  const std::vector<std::string> parts = split_commas(text);
  if (parts.size() != 2) {
    throw InvalidArgument(std::string(what) + ": expected lo,hi but got '" +
                          text + "'");
  }
  const bool lo_inf = parts[0] == "-inf";
  const bool hi_inf = parts[1] == "inf" || parts[1] == "+inf";
  std::optional<Interval> win;
  if (!window.empty()) win = domain_arg(window, "", "--window");
  if ((lo_inf || hi_inf) && !win) {
    throw InvalidArgument(std::string(what) +
                          " is unbounded; pass --window lo,hi to pick the "
                          "bounded part to certify");
  }
  const Rational lo = lo_inf ? win->lo() : rational_arg(parts[0], what);
  const Rational hi = hi_inf ? win->hi() : rational_arg(parts[1], what);
  if (hi < lo) {
    throw InvalidArgument(std::string(what) + ": lo > hi in '" + text + "'");
  }
  Interval d(lo, hi);
  if (win) {
    const auto clipped = d.intersect(*win);
    if (!clipped) {
      throw InvalidArgument(std::string(what) + " does not meet the window");
    }
    d = *clipped;
  }
  return d;
}

FunctionSpec function_arg(const std::string& text, const Interval& domain,
                          Precision prec) {
  return FunctionSpec(parse(text), domain, prec);
}

Json function_json(const std::string& text) {
  const Expr e = parse(text);
  return {{"text", format(e)}, {"ast", to_json(e)}};
}

// key: value lines for the text output; intervals print as [lo, hi].
void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    if (key == "display_only" || key == "ast") continue;
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object() && value.contains("lo") && value.contains("hi") &&
        value.size() == 3) {
      out << name << ": [" << value["lo"].get<std::string>() << ", "
          << value["hi"].get<std::string>() << "]  ~ ["
          << value["display_only"]["lo"].get<std::string>() << ", "
          << value["display_only"]["hi"].get<std::string>() << "]\n";
    } else if (value.is_object()) {
      render_text(value, name, out);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        render_text(value[i], name + "[" + std::to_string(i) + "]", out);
      }
    } else if (value.is_string()) {
      out << name << ": " << value.get<std::string>() << "\n";
    } else {
      out << name << ": " << value.dump() << "\n";
    }
  }
}

struct Outcome {
  Json body;
  int code = kExitOk;
  /// Rows for --output csv-plot; empty header means the command has none.
  std::string csv_header;
  std::vector<std::string> csv_rows;
};

int code_for(Status s) {
  switch (s) {
    case Status::Certified: return kExitOk;
    case Status::Refuted: return kExitViolation;
    case Status::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

struct VerifyArgs {
  std::string F, f, domain;
};

Outcome verify_control(const VerifyArgs& a, const RunConfig& cfg) {
  const Interval domain = domain_arg(a.domain, cfg.window, "--domain");
  const ControlClaim claim(function_arg(a.F, domain, cfg.prec()),
                           function_arg(a.f, domain, cfg.prec()), domain);
  Outcome o;
  o.csv_header = "u,v,status,p,q";
  int certified = 0;
  int endpoint = 0;
  int strict = 0;
  int inconclusive = 0;
  Json refuted = nullptr;
  Json undecided = Json::array();
  const auto family = subinterval_family(domain, cfg.budget, cfg.seed);
  for (const auto& [u, v] : family) {
    const Verdict verdict = check_bracket(claim, u, v, cfg.grid_n, cfg.prec());
    std::string p = "";
    std::string q = "";
    if (const auto* w = std::get_if<BracketWitness>(&verdict.payload)) {
      ++certified;
      if ((w->p == u || w->p == v) && (w->q == u || w->q == v)) ++endpoint;
      if (w->strict) ++strict;
      p = w->p.to_decimal();
      q = w->q.to_decimal();
    } else if (verdict.status == Status::Refuted) {
      if (refuted.is_null()) refuted = to_json(verdict);
    } else {
      ++inconclusive;
      if (undecided.size() < 5) {
        undecided.push_back({{"u", to_json(u)}, {"v", to_json(v)},
                             {"note", verdict.note}});
      }
    }
    o.csv_rows.push_back(u.to_decimal() + "," + v.to_decimal() + "," +
                         std::string(status_name(verdict.status)) + "," + p +
                         "," + q);
  }
  const auto violation =
      refuted.is_null() ? falsify_control(claim, cfg.budget, cfg.seed + 1, cfg.prec())
                        : std::nullopt;
  Json found = refuted;
  if (found.is_null() && violation) {
    found = to_json(Verdict{Status::Refuted, *violation,
                            "found by range-enclosure falsification",
                            violation->precision_bits});
  }
  o.body["F"] = function_json(a.F);
  o.body["f"] = function_json(a.f);
  o.body["domain"] = to_json(domain);
  o.body["subintervals"] = static_cast<int>(family.size());
  o.body["certified"] = certified;
  o.body["endpoint_witnesses"] = endpoint;
  o.body["strict_witnesses"] = strict;
  o.body["inconclusive"] = inconclusive;
  o.body["inconclusive_examples"] = undecided;
  o.body["violation"] = found;
  const Status status = !found.is_null() ? Status::Refuted
                        : inconclusive > 0 ? Status::Inconclusive
                                           : Status::Certified;
  o.body["status"] = std::string(status_name(status));
  o.code = code_for(status);
  return o;
}

struct IntegrateArgs {
  std::string f, u, v, domain, breakpoints, lipschitz;
  long long n = 1000;
};

Outcome integrate(const IntegrateArgs& a, const RunConfig& cfg) {
  const Rational u = rational_arg(a.u, "--u");
  const Rational v = rational_arg(a.v, "--v");
  const Interval domain = a.domain.empty()
                              ? Interval::hull(u, v)
                              : domain_arg(a.domain, cfg.window, "--domain");
  const FunctionSpec f = function_arg(a.f, domain, cfg.prec());
  IntegrateOptions opts;
  if (!a.lipschitz.empty()) opts.lipschitz = rational_arg(a.lipschitz, "--lipschitz");
  const PiecewisePlan plan{rational_list(a.breakpoints, "--breakpoints")};
  const IntegralEnclosure e =
      plan.breakpoints.empty()
          ? integrate_enclosure(f, u, v, a.n, cfg.prec(), opts)
          : integrate_piecewise(f, plan, u, v, a.n, cfg.prec(), opts);
  Outcome o;
  o.body["f"] = function_json(a.f);
  o.body["breakpoints"] = Json::array();
  for (const Rational& b : plan.breakpoints) o.body["breakpoints"].push_back(to_json(b));
  o.body["enclosure"] = to_json(e);
  o.csv_header = "x_lo,x_hi,m,M";
  for (const Cell& c : e.cells) {
    o.csv_rows.push_back(c.a.to_decimal() + "," + c.b.to_decimal() + "," +
                         c.range.lo().to_decimal() + "," +
                         c.range.hi().to_decimal());
  }
  return o;
}

struct ApproxArgs {
  std::string F, f, base, target, domain;
};

Outcome approx(const ApproxArgs& a, const RunConfig& cfg) {
  const Rational base = rational_arg(a.base, "--base");
  const Rational target = rational_arg(a.target, "--target");
  const Interval domain = a.domain.empty()
                              ? Interval::hull(base, target)
                              : domain_arg(a.domain, cfg.window, "--domain");
  const Approximation r =
      approximate_with_error(function_arg(a.F, domain, cfg.prec()),
                             function_arg(a.f, domain, cfg.prec()), base, target,
                             cfg.prec());
  Outcome o;
  o.body["F"] = function_json(a.F);
  o.body["f"] = function_json(a.f);
  o.body["base"] = to_json(base);
  o.body["target"] = to_json(target);
  o.body["approximation"] = to_json(r);
  return o;
}

struct LipschitzArgs {
  std::string f, domain, M;
  int max_level = 10;
};

Outcome lipschitz(const LipschitzArgs& a, const RunConfig& cfg) {
  const Interval domain = domain_arg(a.domain, cfg.window, "--domain");
  const FunctionSpec f = function_arg(a.f, domain, cfg.prec());
  LipschitzResult r;
  if (!a.M.empty()) {
    r = user_lipschitz(f, domain, rational_arg(a.M, "--M"));
  } else {
    LipschitzOptions opts;
    opts.max_level = a.max_level;
    r = lipschitz_bound(f, domain, cfg.prec(), opts);
  }
  Outcome o;
  o.body = to_json(r);
  o.code = std::holds_alternative<LipschitzCert>(r) ? kExitOk : kExitInconclusive;
  return o;
}

struct LinqunArgs {
  std::string f, g, domain, M, bracket;
  int samples = 10000;
};

Outcome linqun(const LinqunArgs& a, const RunConfig& cfg) {
  const Interval domain = domain_arg(a.domain, cfg.window, "--domain");
  const FunctionSpec f = function_arg(a.f, domain, cfg.prec());
  const FunctionSpec g = function_arg(a.g, domain, cfg.prec());
  const Rational M = rational_arg(a.M, "--M");
  const LinqunResult r = check_linqun(f, g, domain, M, a.samples, cfg.prec(), cfg.seed);
  Outcome o;
  o.body["f"] = function_json(a.f);
  o.body["g"] = function_json(a.g);
  o.body["linqun"] = to_json(r);
  o.body["control_2M_lipschitz"] =
      to_json(control_is_2M_lipschitz(f, g, domain, M, a.samples, cfg.prec(), cfg.seed));
  if (std::holds_alternative<LinqunCounterexample>(r)) {
    o.code = kExitViolation;
  } else if (!std::get<LinqunReport>(r).passed()) {
    o.code = kExitInconclusive;
  }
  if (!a.bracket.empty()) {
    const std::vector<Rational> uv = rational_list(a.bracket, "--bracket");
    if (uv.size() != 2) throw InvalidArgument("--bracket: expected u,v");
    try {
      o.body["bracket"] = to_json(
          find_bracket_by_subdivision(f, g, M, uv[0], uv[1], cfg.prec()));
    } catch (const HypothesisViolated& e) {
      o.body["bracket"] = {{"error", "hypothesis-violated"}, {"message", e.what()}};
      o.code = std::max(o.code, kExitViolation);
    } catch (const SearchExhausted& e) {
      o.body["bracket"] = {{"error", "search-exhausted"}, {"message", e.what()}};
      if (o.code == kExitOk) o.code = kExitInconclusive;
    }
  }
  return o;
}

struct NlArgs {
  std::string F, f, u, v, domain, breakpoints;
  long long n = 2000;
};

Outcome nl_check(const NlArgs& a, const RunConfig& cfg) {
  const Rational u = rational_arg(a.u, "--u");
  const Rational v = rational_arg(a.v, "--v");
  const Interval domain = a.domain.empty()
                              ? Interval::hull(u, v)
                              : domain_arg(a.domain, cfg.window, "--domain");
  const Verdict verdict = newton_leibniz_check(
      function_arg(a.F, domain, cfg.prec()), function_arg(a.f, domain, cfg.prec()),
      u, v, a.n, cfg.prec(), {rational_list(a.breakpoints, "--breakpoints")});
  Outcome o;
  o.body["F"] = function_json(a.F);
  o.body["f"] = function_json(a.f);
  o.body["verdict"] = to_json(verdict);
  o.code = code_for(verdict.status);
  return o;
}

struct ShapeArgs {
  std::string F, f, domain, fact;
  bool verify = false;
};

Outcome shape(const ShapeArgs& a, const RunConfig& cfg) {
  const Interval domain = domain_arg(a.domain, cfg.window, "--domain");
  const ControlClaim claim(function_arg(a.F, domain, cfg.prec()),
                           function_arg(a.f, domain, cfg.prec()), domain);
  std::string basis = "assumed";
  if (a.verify) {
    if (auto violation = falsify_control(claim, cfg.budget, cfg.seed, cfg.prec())) {
      Outcome o;
      o.body["claim"] = to_json(Verdict{Status::Refuted, *violation,
                                        "the control claim itself is false",
                                        violation->precision_bits});
      o.code = kExitViolation;
      return o;
    }
    basis = "no violation on " + std::to_string(cfg.budget) + " subintervals";
  }
  Outcome o;
  o.body["F"] = function_json(a.F);
  o.body["f"] = function_json(a.f);
  o.body["shape"] = to_json(infer_shape(claim, parse_fact(a.fact), cfg.prec(),
                                        cfg.grid_n, basis));
  return o;
}

struct GlueArgs {
  std::string F, f, left, right, cubic, u, v;
};

Outcome glue(const GlueArgs& a, const RunConfig& cfg) {
  Outcome o;
  if (!a.cubic.empty()) {
    const std::vector<Rational> abc = rational_list(a.cubic, "--cubic");
    if (abc.size() != 3) throw InvalidArgument("--cubic: expected a,b,c");
    if (cfg.window.empty()) throw InvalidArgument("--cubic needs --window lo,hi");
    const Interval window = domain_arg(cfg.window, "", "--window");
    const Verdict cert = cubic_control_certificate(abc[0], abc[1], abc[2], window);
    o.body["certificate"] = to_json(cert);
    o.code = code_for(cert.status);
    return o;
  }
  const Interval left = domain_arg(a.left, cfg.window, "--left");
  const Interval right = domain_arg(a.right, cfg.window, "--right");
  const Interval hull = left.hull_with(right);
  auto claim_on = [&](const Interval& d) {
    return ControlClaim(function_arg(a.F, d, cfg.prec()),
                        function_arg(a.f, d, cfg.prec()), d);
  };
  const ControlClaim glued = glue_claims(claim_on(left), claim_on(right));
  const Rational u = a.u.empty() ? hull.lo() : rational_arg(a.u, "--u");
  const Rational v = a.v.empty() ? hull.hi() : rational_arg(a.v, "--v");
  const Verdict verdict = check_bracket(glued, u, v, cfg.grid_n, cfg.prec());
  o.body["F"] = function_json(a.F);
  o.body["f"] = function_json(a.f);
  o.body["domain"] = to_json(glued.domain());
  o.body["pieces"] = Json::array();
  for (const Interval& p : glued.pieces()) o.body["pieces"].push_back(to_json(p));
  o.body["verdict"] = to_json(verdict);
  o.code = code_for(verdict.status);
  return o;
}

int emit(const std::string& command, const Outcome& o, const RunConfig& cfg,
         std::ostream& out, std::ostream& err) {
  if (cfg.output == "json") {
    out << make_report(command, o.body).dump(2) << "\n";
  } else if (cfg.output == "csv-plot") {
    if (o.csv_header.empty()) {
      err << "error: --output csv-plot is only available for integrate and "
             "verify-control\n";
      return kExitUsage;
    }
    out << o.csv_header << "\n";
    for (const std::string& row : o.csv_rows) out << row << "\n";
  } else {
    out << "command: " << command << "\n";
    render_text(o.body, "", out);
  }
  return o.code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Certify and refute difference-quotient claims, Lipschitz "
               "conditions and integral enclosures with exact arithmetic",
               "limitless"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<Outcome()> action;

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-control",
                                    "check that f controls F on a domain");
  verify->add_option("--F", va.F, "controlled function F(x)")->required();
  verify->add_option("--f", va.f, "control function f(x)")->required();
  verify->add_option("--domain", va.domain, "lo,hi")->required();
  add_config(verify, cfg);
  verify->callback([&] { action = [&] { return verify_control(va, cfg); }; });

  IntegrateArgs ia;
  auto* integ = app.add_subcommand("integrate", "certified integral enclosure");
  integ->add_option("--f", ia.f, "integrand")->required();
  integ->add_option("--u", ia.u, "lower limit")->required();
  integ->add_option("--v", ia.v, "upper limit")->required();
  integ->add_option("--n", ia.n, "cells (per piece when split)")
      ->check(CLI::PositiveNumber);
  integ->add_option("--breakpoints", ia.breakpoints, "b1,b2,... inside (u, v)");
  integ->add_option("--domain", ia.domain, "lo,hi; defaults to [u, v]");
  integ->add_option("--lipschitz", ia.lipschitz,
                    "Lipschitz constant of f, for the a priori width bound");
  add_config(integ, cfg);
  integ->callback([&] { action = [&] { return integrate(ia, cfg); }; });

  ApproxArgs aa;
  auto* appr = app.add_subcommand("approx",
                                  "F(target) from F(base) with a certified error");
  appr->add_option("--F", aa.F, "function to approximate")->required();
  appr->add_option("--f", aa.f, "monotone control function")->required();
  appr->add_option("--base", aa.base, "point where F and f are exact")->required();
  appr->add_option("--target", aa.target, "point to approximate at")->required();
  appr->add_option("--domain", aa.domain, "lo,hi; defaults to the span");
  add_config(appr, cfg);
  appr->callback([&] { action = [&] { return approx(aa, cfg); }; });

  LipschitzArgs la;
  auto* lip = app.add_subcommand("lipschitz", "certified Lipschitz constant");
  lip->add_option("--f", la.f, "function")->required();
  lip->add_option("--domain", la.domain, "lo,hi")->required();
  lip->add_option("--M", la.M, "record a caller-asserted constant instead");
  lip->add_option("--max-level", la.max_level, "deepest refinement 2^level")
      ->check(CLI::Range(0, 20));
  add_config(lip, cfg);
  lip->callback([&] { action = [&] { return lipschitz(la, cfg); }; });

  LinqunArgs qa;
  auto* lq = app.add_subcommand(
      "linqun", "|(f(v) - f(u))/(v - u) - g(s)| <= M |v - u| on samples");
  lq->add_option("--f", qa.f, "function")->required();
  lq->add_option("--g", qa.g, "candidate derivative")->required();
  lq->add_option("--domain", qa.domain, "lo,hi")->required();
  lq->add_option("--M", qa.M, "constant")->required();
  lq->add_option("--samples", qa.samples, "number of (u, v, s) samples")
      ->check(CLI::PositiveNumber);
  lq->add_option("--bracket", qa.bracket,
                 "u,v: also build bracket points by subdivision");
  add_config(lq, cfg);
  lq->callback([&] { action = [&] { return linqun(qa, cfg); }; });

  NlArgs na;
  auto* nl = app.add_subcommand("nl-check",
                                "F(v) - F(u) against the integral of f");
  nl->add_option("--F", na.F, "antiderivative candidate")->required();
  nl->add_option("--f", na.f, "integrand")->required();
  nl->add_option("--u", na.u, "lower limit")->required();
  nl->add_option("--v", na.v, "upper limit")->required();
  nl->add_option("--n", na.n, "cells (per piece when split)")
      ->check(CLI::PositiveNumber);
  nl->add_option("--breakpoints", na.breakpoints, "b1,b2,... inside (u, v)");
  nl->add_option("--domain", na.domain, "lo,hi; defaults to [u, v]");
  add_config(nl, cfg);
  nl->callback([&] { action = [&] { return nl_check(na, cfg); }; });

  ShapeArgs sa;
  auto* sh = app.add_subcommand("shape", "shape of F implied by a fact about f");
  sh->add_option("--F", sa.F, "controlled function")->required();
  sh->add_option("--f", sa.f, "control function")->required();
  sh->add_option("--domain", sa.domain, "lo,hi")->required();
  sh->add_option("--fact", sa.fact,
                 "identically-zero, identically-const, positive, negative, "
                 "increasing or decreasing")
      ->required();
  sh->add_flag("--verify", sa.verify, "falsification-test the claim first");
  add_config(sh, cfg);
  sh->callback([&] { action = [&] { return shape(sa, cfg); }; });

  GlueArgs ga;
  auto* gl = app.add_subcommand("glue", "join claims on overlapping intervals");
  gl->add_option("--F", ga.F, "controlled function");
  gl->add_option("--f", ga.f, "control function");
  gl->add_option("--left", ga.left, "lo,hi of the first claim");
  gl->add_option("--right", ga.right, "lo,hi of the second claim");
  gl->add_option("--u", ga.u, "check from (defaults to the joined lo)");
  gl->add_option("--v", ga.v, "check to (defaults to the joined hi)");
  gl->add_option("--cubic", ga.cubic,
                 "a,b,c: certify 3x^2+2ax+b controls x^3+ax^2+bx+c instead");
  add_config(gl, cfg);
  gl->callback([&] {
    action = [&] {
      if (ga.cubic.empty() &&
          (ga.F.empty() || ga.f.empty() || ga.left.empty() || ga.right.empty())) {
        throw InvalidArgument("glue needs --F, --f, --left and --right, or --cubic");
      }
      return glue(ga, cfg);
    };
  });

  std::string fmt_text;
  auto* fm = app.add_subcommand("fmt", "print an expression in canonical form");
  fm->add_option("expr", fmt_text, "expression")->required();
  add_config(fm, cfg);
  fm->callback([&] {
    action = [&] {
      Outcome o;
      const Expr e = parse(fmt_text);
      o.body["input"] = fmt_text;
      o.body["canonical"] = format(e);
      o.body["ast"] = to_json(e);
      return o;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return emit(command, action(), cfg, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "; expected one of:";
    for (const std::string& tok : e.expected()) err << " " << tok;
    err << "\n";
    return kExitUsage;
  } catch (const EvalDomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DisjointDomains& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PremiseNotCertified& e) {
    err << "premise not certified: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const ConclusionRefuted& e) {
    err << "conclusion refuted: " << e.what() << "\n";
    return kExitViolation;
  }
}

}  // namespace limitless
