#include "limitless/report/report.hpp"

namespace limitless {

namespace {

constexpr int kDisplayDigits = 12;

Json display(const Rational& r) { return r.to_decimal(kDisplayDigits); }

bool is_binary(Op op) {
  return op == Op::Add || op == Op::Sub || op == Op::Mul || op == Op::Div;
}

Json payload_json(const Payload& p) {
  struct Visit {
    Json operator()(const std::monostate&) const { return nullptr; }
    Json operator()(const BracketWitness& w) const {
      Json j;
      j["kind"] = "bracket-witness";
      j["u"] = to_json(w.u);
      j["v"] = to_json(w.v);
      j["p"] = to_json(w.p);
      j["q"] = to_json(w.q);
      j["dq"] = to_json(w.dq);
      j["f_p"] = to_json(w.f_p);
      j["f_q"] = to_json(w.f_q);
      j["strict"] = w.strict;
      j["endpoint_witness"] = (w.p == w.u || w.p == w.v) && (w.q == w.u || w.q == w.v);
      return j;
    }
    Json operator()(const Violation& v) const {
      Json j;
      j["kind"] = "violation";
      j["u"] = to_json(v.u);
      j["v"] = to_json(v.v);
      j["dq"] = to_json(v.dq);
      j["f_range"] = to_json(v.f_range);
      j["side"] = v.side == Side::Below ? "below" : "above";
      j["precision_bits"] = v.precision_bits;
      return j;
    }
    Json operator()(const EnclosureComparison& c) const {
      Json j;
      j["kind"] = "enclosure-comparison";
      j["lhs_label"] = c.lhs_label;
      j["lhs"] = to_json(c.lhs);
      j["rhs_label"] = c.rhs_label;
      j["rhs"] = to_json(c.rhs);
      return j;
    }
    Json operator()(const CubicCertificate& c) const {
      Json j;
      j["kind"] = "cubic-certificate";
      j["a"] = to_json(c.a);
      j["b"] = to_json(c.b);
      j["c"] = to_json(c.c);
      j["split"] = to_json(c.split);
      j["window"] = to_json(c.window);
      j["identities"] = c.identities;
      j["coefficients_compared"] = c.coefficients_compared;
      return j;
    }
    Json operator()(const PairViolation& v) const {
      Json j;
      j["kind"] = "pair-violation";
      j["u"] = to_json(v.u);
      j["v"] = to_json(v.v);
      j["lhs"] = to_json(v.lhs);
      j["rhs"] = to_json(v.rhs);
      return j;
    }
  };
  return std::visit(Visit{}, p);
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Interval& x) {
  Json j;
  j["lo"] = to_json(x.lo());
  j["hi"] = to_json(x.hi());
  j["display_only"] = {{"lo", display(x.lo())}, {"hi", display(x.hi())}};
  return j;
}

Json to_json(const Expr& e) {
  Json j;
  j["op"] = std::string(op_name(e.op()));
  switch (e.op()) {
    case Op::Const: j["value"] = to_json(e.value()); return j;
    case Op::Var: return j;
    case Op::Pow: j["exponent"] = e.exponent(); break;
    default: break;
  }
  Json args = Json::array();
  args.push_back(to_json(e.lhs()));
  if (is_binary(e.op())) args.push_back(to_json(e.rhs()));
  j["args"] = std::move(args);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["status"] = std::string(status_name(v.status));
  j["payload"] = payload_json(v.payload);
  j["note"] = v.note;
  j["precision_bits"] = v.precision_bits;
  return j;
}

Json to_json(const IntegralEnclosure& e, bool with_cells) {
  Json j;
  j["u"] = to_json(e.u);
  j["v"] = to_json(e.v);
  j["lo"] = to_json(e.lo);
  j["hi"] = to_json(e.hi);
  j["width"] = to_json(e.width());
  j["n"] = e.n;
  j["width_bound"] = e.width_bound ? to_json(*e.width_bound) : Json(nullptr);
  j["monotone_fast_path"] = e.monotone;
  j["display_only"] = {{"lo", display(e.lo)}, {"hi", display(e.hi)}};
  if (with_cells) {
    Json cells = Json::array();
    for (const Cell& c : e.cells) {
      cells.push_back({{"a", to_json(c.a)}, {"b", to_json(c.b)},
                       {"range", to_json(c.range)}});
    }
    j["cells"] = std::move(cells);
  }
  return j;
}

Json to_json(const LipschitzResult& r) {
  Json j;
  if (const auto* cert = std::get_if<LipschitzCert>(&r)) {
    j["lipschitz"] = true;
    j["fn"] = to_json(cert->fn);
    j["domain"] = to_json(cert->domain);
    j["M"] = to_json(cert->M);
    j["method"] = std::string(method_name(cert->method));
    j["pieces"] = cert->pieces;
    j["display_only"] = {{"M", display(cert->M)}};
  } else {
    j["lipschitz"] = false;
    j["reason"] = std::get<NotLipschitz>(r).reason;
  }
  return j;
}

Json to_json(const LinqunResult& r) {
  Json j;
  if (const auto* rep = std::get_if<LinqunReport>(&r)) {
    j["result"] = rep->passed() ? "pass" : "undecided";
    j["domain"] = to_json(rep->domain);
    j["M"] = to_json(rep->M);
    j["samples_checked"] = rep->samples_checked;
    j["undecided"] = rep->undecided;
    j["worst_slack"] = to_json(rep->worst_slack);
  } else {
    const auto& cx = std::get<LinqunCounterexample>(r);
    j["result"] = "counterexample";
    j["u"] = to_json(cx.u);
    j["v"] = to_json(cx.v);
    j["s"] = to_json(cx.s);
    j["lhs"] = to_json(cx.lhs);
    j["rhs"] = to_json(cx.rhs);
    j["gap"] = to_json(cx.gap);
  }
  return j;
}

Json to_json(const ShapeReport& r) {
  Json j;
  j["property"] = std::string(shape_name(r.property));
  j["premise"] = std::string(fact_name(r.premise));
  j["domain"] = to_json(r.domain);
  j["rule"] = r.rule;
  j["claim_basis"] = r.claim_basis;
  j["grid_points"] = r.grid_points;
  j["spot_checks"] = r.spot_checks;
  j["spot_checks_undecided"] = r.spot_checks_undecided;
  return j;
}

Json to_json(const Approximation& a) {
  Json j;
  j["approx"] = to_json(a.approx);
  j["error_bound"] = to_json(a.error_bound);
  j["direction"] = std::string(monotone_name(a.direction));
  j["bracket"] = to_json(a.bracket);
  j["display_only"] = {{"approx", display(a.approx)},
                       {"error_bound", display(a.error_bound)}};
  return j;
}

Json to_json(const SubdivisionBracket& b) {
  Json j;
  j["p"] = to_json(b.p);
  j["q"] = to_json(b.q);
  j["dq"] = to_json(b.dq);
  j["g_p"] = to_json(b.g_p);
  j["g_q"] = to_json(b.g_q);
  j["p_route"] = b.p_route;
  j["q_route"] = b.q_route;
  return j;
}

Json make_report(const std::string& command, const Json& body) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  for (const auto& [key, value] : body.items()) j[key] = value;
  return j;
}

}  // namespace limitless
