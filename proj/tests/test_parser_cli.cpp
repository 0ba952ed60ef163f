#include <doctest.h>

#include <sstream>

#include "gen.hpp"
#include "monodep/cli.hpp"
#include "monodep/parser.hpp"
#include "monodep/suites.hpp"

using namespace monodep;

namespace {

QuadScalar qr(long p, long d) { return QuadScalar(Rational(p, d)); }

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_element in V and R") {
  CHECK(parse_element<VElem>("v^(3/2)") == VElem::v_pow(qr(3, 2)));
  CHECK(parse_element<VElem>("v^(2-s2)") == VElem::v_pow(QuadScalar(2) - QuadScalar::sqrt2()));
  CHECK(parse_element<VElem>("(1 + v)/v^0") == VElem(Rational(1)) + VElem::v_pow(QuadScalar(1)));

  const RElem a = parse_element<RElem>("1/2 + u*v^(1/3)");
  const auto m = r_membership(a);
  REQUIRE(m);
  CHECK(m->const_part == Rational(1, 2));
  CHECK_FALSE(RRing::contains(parse_element<RElem>("u + v")));
  CHECK_THROWS_AS(parse_element<VElem>("u"), ParseError);
}

TEST_CASE("parse_poly text round trip") {
  const auto p = parse_poly<VElem>("Y^2 - v^(1/2)*X", 2);
  CHECK(p.to_string() == "-v^(1/2)*X1 + X2^2");
  CHECK(parse_poly<VElem>(p.to_string(), 2) == p);
  CHECK(parse_poly<VElem>("X1*X2/X1", 2) == parse_poly<VElem>("X2", 2));

  Rng rng(51);
  for (int t = 0; t < 100; ++t) {
    LaurentPoly<VElem> q(2);
    for (int i = 0; i < 3; ++i)
      q.add_term(make_exp({uniform_int(rng, -2, 3), uniform_int(rng, 0, 3)}), random_v_elem(rng));
    CHECK(parse_poly<VElem>(q.to_string(), 2) == q);
  }
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_element<VElem>("v^(3/2");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  try {
    parse_poly<VElem>("X + * Y", 2);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_ring_kind("Z"), std::invalid_argument);
  CHECK(split_top_level("v, (1 + v, 2), 3") == std::vector<std::string>{"v", "(1 + v, 2)", "3"});
}

TEST_CASE("CLI exit codes") {
  CHECK(cli({"witness", "--ring", "R", "--matrix", "1,0;0,1", "--elements", "v^(3/2), v"}).code == kExitPass);
  CHECK(cli({"verify", "--ring", "V", "--matrix", "1,1", "--kind", "preorder", "--elements", "v, v^2", "--poly",
             "X - Y"})
            .code == kExitFail);
  const Run membership = cli({"witness", "--ring", "R", "--matrix", "1,0;0,1", "--elements", "u + v, v"});
  CHECK(membership.code == kExitUsage);
  CHECK(membership.err.find("membership") != std::string::npos);
  const Run syntax = cli({"witness", "--ring", "V", "--matrix", "1,0;0,1", "--elements", "v^(3/2"});
  CHECK(syntax.code == kExitUsage);
  CHECK(syntax.err.find("position 6") != std::string::npos);
  CHECK(cli({"witness", "--ring", "V"}).code == kExitUsage);
  CHECK(cli({"nonsense"}).code == kExitUsage);
  CHECK(cli({"suite", "--name", "nope"}).code == kExitUsage);
}

TEST_CASE("CLI witness output verifies") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"2,1;1,0", "v^(3/2), v"}, {"1,1,1;1,0,0;0,1,0", "v^(s2), v^(1/2), 1 + v"}, {"2,1;1,0", "2 + v, v^(1/3)"}};
  for (const auto& [mat, e] : cases) {
    const Run w = cli({"witness", "--ring", "V", "--matrix", mat, "--elements", e, "--json"});
    REQUIRE(w.code == kExitPass);
    const Json j = Json::parse(w.out);
    const std::string poly = j["cases"][0]["witness"];
    const Run v = cli({"verify", "--ring", "V", "--matrix", mat, "--elements", e, "--poly", poly});
    CHECK(v.code == kExitPass);
  }
}

TEST_CASE("suite JSON is deterministic") {
  const std::vector<std::string> args = {"suite", "--name", "pR", "--seed", "5", "--scale", "3", "--json"};
  const Run a = cli(args), b = cli(args);
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
  const Run c = cli({"suite", "--name", "pR", "--seed", "6", "--scale", "3", "--json"});
  CHECK(c.out != a.out);
}

TEST_CASE("run_suite at small scales") {
  const Report empty = run_suite("pR", 1, 0);
  CHECK(empty.all_pass());
  const Report pv = run_suite("pV", 7, 10);
  CHECK(pv.all_pass());
  CHECK(pv.passed() == pv.cases.size());
  CHECK_THROWS_AS(run_suite("nope", 1, 1), std::invalid_argument);
}
