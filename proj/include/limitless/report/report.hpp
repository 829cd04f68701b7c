#pragma once

#include <string>

#include "json.hpp"
#include "limitless/control/shape.hpp"
#include "limitless/control/verdict.hpp"
#include "limitless/expr/expr.hpp"
#include "limitless/integral/integral.hpp"
#include "limitless/lipschitz/lipschitz.hpp"

namespace limitless {

using Json = nlohmann::ordered_json;

constexpr int kReportSchema = 1;

/// Exact values are "p/q" strings. Decimal renderings only ever appear
/// under a "display_only" key.
Json to_json(const Rational& r);
Json to_json(const Interval& x);
/// {"op": name} plus "value" for constants, "exponent" for powers and
/// "args" for operands.
Json to_json(const Expr& e);
Json to_json(const Verdict& v);
Json to_json(const IntegralEnclosure& e, bool with_cells = false);
Json to_json(const LipschitzResult& r);
Json to_json(const LinqunResult& r);
Json to_json(const ShapeReport& r);
Json to_json(const Approximation& a);
Json to_json(const SubdivisionBracket& b);

/// {"schema": 1, "command": command} followed by the fields of `body`.
Json make_report(const std::string& command, const Json& body);

}  // namespace limitless
