#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "limitless/cli/cli.hpp"
#include "limitless/numeric/rational.hpp"

using limitless::Rational;
using limitless::run_cli;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--output");
  args.push_back("json");
  const Run r = run(args);
  INFO(r.err);
  REQUIRE(r.code == expected_code);
  return Json::parse(r.out);
}

Rational q(const Json& j) { return Rational::parse(j.get<std::string>()); }

}  // namespace

TEST_CASE("approx reproduces sqrt(10) from sqrt(9)") {
  const Json j = run_json({"approx", "--F", "sqrt(x)", "--f", "1/(2*sqrt(x))",
                           "--base", "9", "--target", "10"});
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "approx");
  CHECK(q(j["approximation"]["approx"]) == Rational(19, 6));
  CHECK(q(j["approximation"]["error_bound"]) <= Rational(1, 114));

  const Json same = run_json({"approx", "--F", "sqrt(x)", "--f", "1/(2*sqrt(x))",
                              "--base", "9", "--target", "9"});
  CHECK(q(same["approximation"]["approx"]) == Rational(3));
  CHECK(q(same["approximation"]["error_bound"]) == Rational(0));

  CHECK(run({"approx", "--F", "x^3", "--f", "3*x^2", "--base", "-1", "--target",
             "1"})
            .code == 2);
}

TEST_CASE("verify-control exit codes") {
  const Json ok = run_json({"verify-control", "--F", "x^2", "--f", "2*x",
                            "--domain", "0,10", "--budget", "200"});
  CHECK(ok["status"] == "certified");
  CHECK(ok["endpoint_witnesses"] == 200);

  const Json bad = run_json({"verify-control", "--F", "x^2", "--f", "3*x",
                             "--domain", "1,3", "--budget", "100"},
                            1);
  CHECK(bad["violation"]["payload"]["kind"] == "violation");
  const Rational u = q(bad["violation"]["payload"]["u"]);
  const Rational v = q(bad["violation"]["payload"]["v"]);
  CHECK(Rational(1) <= u);
  CHECK(u < v);
  CHECK(v <= Rational(3));

  const Run parse_fail = run({"verify-control", "--F", "x^", "--f", "3*x",
                              "--domain", "1,3"});
  CHECK(parse_fail.code == 64);
  CHECK(parse_fail.err.find("offset 2") != std::string::npos);

  CHECK(run({"verify-control", "--F", "x", "--f", "1", "--domain", "0,inf"}).code == 64);
  CHECK(run({"verify-control", "--F", "x", "--f", "1", "--domain", "0,inf",
             "--window", "-5,5", "--budget", "20"})
            .code == 0);
  CHECK(run({"verify-control", "--F", "x", "--f", "1", "--domain", "0,1",
             "--precision-bits", "4"})
            .code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({}).code == 64);
}

TEST_CASE("integrate") {
  const Json sgn = run_json({"integrate", "--f", "sgn(x)", "--u", "-1", "--v",
                             "2", "--breakpoints", "0", "--n", "300"});
  const Rational lo = q(sgn["enclosure"]["lo"]);
  const Rational hi = q(sgn["enclosure"]["hi"]);
  CHECK(lo <= Rational(1));
  CHECK(Rational(1) <= hi);
  CHECK(hi - lo <= Rational(1, 50));

  const Json sq = run_json({"integrate", "--f", "x^2", "--u", "0", "--v", "1",
                            "--n", "1000"});
  CHECK(q(sq["enclosure"]["lo"]) <= Rational(1, 3));
  CHECK(Rational(1, 3) <= q(sq["enclosure"]["hi"]));
  CHECK(q(sq["enclosure"]["width"]) <= Rational(1, 500));

  const Run pole = run({"integrate", "--f", "1/x", "--u", "-1", "--v", "1"});
  CHECK(pole.code == 64);
  CHECK(pole.err.find("pole") != std::string::npos);

  const Run csv = run({"integrate", "--f", "x^2", "--u", "0", "--v", "1", "--n",
                       "4", "--output", "csv-plot"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("x_lo,x_hi,m,M\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 5);
  CHECK(run({"fmt", "x", "--output", "csv-plot"}).code == 64);
}

TEST_CASE("misc subcommands") {
  const Json nl = run_json({"nl-check", "--F", "abs(x)", "--f", "sgn(x)", "--u",
                            "-1", "--v", "2", "--breakpoints", "0"});
  CHECK(nl["verdict"]["status"] == "certified");
  CHECK(run({"nl-check", "--F", "x^3", "--f", "2*x", "--u", "0", "--v", "1/2",
             "--n", "1000"})
            .code == 1);

  const Json lq = run_json({"linqun", "--f", "x^2", "--g", "2*x", "--domain",
                            "0,1", "--M", "2"});
  CHECK(lq["linqun"]["result"] == "pass");
  CHECK(q(lq["linqun"]["worst_slack"]) >= Rational(0));
  CHECK(lq["control_2M_lipschitz"]["status"] == "certified");
  CHECK(run({"linqun", "--f", "abs(x)", "--g", "sgn(x)", "--domain", "-1,1",
             "--M", "1000000"})
            .code == 1);
  const Json br = run_json({"linqun", "--f", "x^3", "--g", "3*x^2", "--domain",
                            "-1,1", "--M", "6", "--bracket", "-1,1"});
  const Rational p = q(br["bracket"]["p"]);
  const Rational qq = q(br["bracket"]["q"]);
  CHECK(Rational(3) * p * p <= Rational(1));
  CHECK(Rational(1) <= Rational(3) * qq * qq);

  const Json lip = run_json({"lipschitz", "--f", "x^2", "--domain", "0,1"});
  CHECK(q(lip["M"]) == Rational(2));
  CHECK(run({"lipschitz", "--f", "sgn(x)", "--domain", "-1,1"}).code == 2);

  const Json shape = run_json({"shape", "--F", "x^2", "--f", "2*x", "--domain",
                               "0,4", "--fact", "increasing", "--verify"});
  CHECK(shape["shape"]["property"] == "convex-down");
  CHECK(run({"shape", "--F", "x^2", "--f", "2*x", "--domain", "-1,1", "--fact",
             "positive"})
            .code == 2);
  CHECK(run({"shape", "--F", "x", "--f", "1", "--domain", "0,1", "--fact",
             "sideways"})
            .code == 64);

  const Json glued = run_json({"glue", "--F", "x^3", "--f", "3*x^2", "--left",
                               "-inf,0", "--right", "0,inf", "--window", "-8,8",
                               "--u", "-1", "--v", "2"});
  CHECK(glued["verdict"]["status"] == "certified");
  CHECK(glued["pieces"].size() == 2);
  const Json cubic = run_json({"glue", "--cubic", "1,-2,3", "--window", "-4,4"});
  CHECK(cubic["certificate"]["status"] == "certified");
  CHECK(run({"glue", "--F", "x", "--f", "1", "--left", "0,1", "--right", "2,3"})
            .code == 64);

  const Run fmt = run({"fmt", "x^3+2*x^2"});
  CHECK(fmt.code == 0);
  CHECK(fmt.out.find("canonical: x^3 + 2*x^2") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"verify-control", "--F", "sqrt(x)", "--f", "1/(2*sqrt(x))", "--domain",
       "1/10,100", "--budget", "100", "--seed", "7"},
      {"integrate", "--f", "sin(x)", "--u", "0", "--v", "1", "--n", "50"},
      {"linqun", "--f", "x^2", "--g", "2*x", "--domain", "0,1", "--M", "2",
       "--samples", "500", "--seed", "3"},
      {"shape", "--F", "x^3", "--f", "3*x^2", "--domain", "0,2", "--fact",
       "increasing"},
  };
  for (auto args : commands) {
    args.push_back("--output");
    args.push_back("json");
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("precision from the environment") {
  setenv("LIMITLESS_PRECISION_BITS", "96", 1);
  const Json j = run_json({"nl-check", "--F", "sin(x)", "--f", "cos(x)", "--u",
                           "0", "--v", "1", "--n", "10"});
  CHECK(j["verdict"]["precision_bits"] == 96);
  const Json flag = run_json({"nl-check", "--F", "sin(x)", "--f", "cos(x)", "--u",
                              "0", "--v", "1", "--n", "10", "--precision-bits",
                              "80"});
  CHECK(flag["verdict"]["precision_bits"] == 80);
  unsetenv("LIMITLESS_PRECISION_BITS");
}
