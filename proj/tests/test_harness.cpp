#include <algorithm>

#include "doctest.h"
#include "hochkit/builtins.hpp"
#include "hochkit/error.hpp"
#include "hochkit/harness.hpp"
#include "json.hpp"

using namespace hochkit;

namespace {

const Field Q = Field::rationals();

const Check& find(const Report& r, const std::string& name) {
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == name; });
  REQUIRE(it != r.checks.end());
  return *it;
}

}  // namespace

TEST_CASE("parse the two smallest algebras") {
  DgAlgebra k = parse_algebra("field Q\nbasis 1:0\nunit 1\n");
  CHECK(k == ground_field(Q));

  DgAlgebra d = parse_algebra(
      "# k[x]/(x^2)\n"
      "field Q\n"
      "basis 1:0 x:0\n"
      "unit 1\n"
      "x * x = 0   # nilpotent\n");
  CHECK(d == dual_numbers(Q));

  DgAlgebra f = parse_algebra("field Fp 5\nbasis 1:0 x:0\nunit 1\nx * x = 0\n");
  CHECK(f == dual_numbers(Field::prime(5)));
}

TEST_CASE("coefficients and signs") {
  DgAlgebra a = parse_algebra("field Q\nbasis e:0 x:0\nunit e\nx * x = -1/2*e + 3*x\n");
  Field f = a.field();
  SparseVector expected{{0, f.element(Rational(-1, 2))}, {1, f.element(Rational(3))}};
  CHECK(a.product(1, 1) == expected);
}

TEST_CASE("axiom failures name the axiom") {
  try {
    parse_algebra("field Q\nbasis 1:0 x:1\nunit 1\nx * x = 1\n");
    FAIL("expected InvalidAlgebra");
  } catch (const InvalidAlgebra& e) {
    CHECK(std::string(e.what()).find("degree additivity") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_algebra("field Q\nbasis 1:0 x:0\nunit 1\nd x = 1\n"), InvalidAlgebra);
}

TEST_CASE("syntax errors carry positions") {
  auto position = [](const std::string& text) {
    try {
      parse_algebra(text);
    } catch (const ParseError& e) {
      return std::pair<int, int>(e.line(), e.column());
    }
    return std::pair<int, int>(0, 0);
  };
  CHECK(position("field Q\nbasis 1:0 x:0\nunit 1\nx * y = 0\n") == std::pair(4, 5));
  CHECK(position("field Q\nbasis 1:0 x:zero\n") == std::pair(2, 13));
  CHECK(position("field Q\nbasis 1:0 1:0\n") == std::pair(2, 11));
  CHECK(position("field Q\nbasis 1:0\nunit 1\nfrobnicate\n") == std::pair(4, 1));
  CHECK(position("field Q\nbasis 1:0 x:0\nunit 1\nx * x = 2*\n") == std::pair(4, 11));
  CHECK(position("field Q\nbasis 1:0 x:0\nunit 1\nx * x = 0\nx * x = x\n") == std::pair(5, 1));
  CHECK(position("basis 1:0\nunit 1\n").first == 3);
  CHECK(position("field Fp 4\n") == std::pair(1, 7));
}

TEST_CASE("serialize then parse is the identity on builtins") {
  std::vector<DgAlgebra> all;
  for (Field f : {Q, Field::prime(2), Field::prime(7)})
    for (const auto& name : builtin_names()) all.push_back(builtin(name, f));
  all.push_back(tensor_algebras(dual_numbers(Q), koszul_example(Q)));
  all.push_back(matrix_algebra(trunc_poly(Q, 3), 2));
  all.push_back(opposite(upper_triangular(Q, 2)));
  for (const auto& a : all) {
    std::string text = serialize_algebra(a);
    CAPTURE(text);
    DgAlgebra b = parse_algebra(text);
    CHECK(b == a);
    CHECK(serialize_algebra(b) == text);
  }
}

TEST_CASE("json output is deterministic without timings") {
  ScenarioOptions o;
  o.max_degree = 3;
  std::string first = to_json(run_scenario("hh", o), false);
  std::string second = to_json(run_scenario("hh", o), false);
  CHECK(first == second);
  auto j = nlohmann::json::parse(first);
  CHECK(j["schema"] == "hochkit/1");
  CHECK(j["pass"] == true);
  CHECK(j["reports"][0].find("seconds") == j["reports"][0].end());
  CHECK(to_json(run_scenario("hh", o), true).find("\"seconds\"") != std::string::npos);
}

TEST_CASE("scenario values") {
  ScenarioOptions o;
  o.max_degree = 4;
  auto hh = run_scenario("hh", o);
  REQUIRE(hh.size() == 1);
  CHECK(hh[0].pass());
  CHECK(*hh[0].checks.front().actual == std::vector<long>{2, 1, 1, 1});

  o.max_degree = 3;
  auto k = run_scenario("kunneth-hh", o);
  REQUIRE(k.size() == 1);
  CHECK(k[0].pass());
  bool seen = false;
  for (const auto& c : k[0].checks)
    if (c.actual && *c.actual == std::vector<long>{4, 4, 5, 6}) seen = true;
  CHECK(seen);

  ScenarioOptions c;
  c.a = "-2";
  c.b = "-2";
  auto ck = run_scenario("cech-kunneth", c);
  REQUIRE(ck.size() == 1);
  CHECK(ck[0].pass());

  ScenarioOptions p;
  p.field = Field::prime(2);
  p.max_degree = 4;
  auto f2 = run_scenario("hh", p);
  CHECK(*f2[0].checks.front().actual == std::vector<long>{2, 2, 2, 2});
}

TEST_CASE("library errors become failed checks") {
  ScenarioOptions o;
  o.algebra = "koszul_example";
  o.max_degree = 2;
  auto r = run_scenario("hc", o);
  REQUIRE(r.size() == 1);
  CHECK_FALSE(r[0].pass());
  const Check& c = find(r[0], "error");
  CHECK_FALSE(c.pass);
  CHECK(c.note.find("degree 0") != std::string::npos);
}

TEST_CASE("bad options") {
  ScenarioOptions o;
  CHECK_THROWS_AS(run_scenario("no-such-command", o), std::invalid_argument);
  o.max_degree = -1;
  CHECK_THROWS_AS(run_scenario("hh", o), std::invalid_argument);
  o = {};
  o.algebra = "nonexistent_algebra";
  CHECK_THROWS_AS(run_scenario("hh", o), std::invalid_argument);
  CHECK_THROWS(run_criterion(0));
  CHECK_THROWS(run_criterion(kCriteria + 1));
}

TEST_CASE("fast criteria pass") {
  for (int id : {1, 2, 9}) {
    Report r = run_criterion(id);
    CAPTURE(id);
    CHECK(r.pass());
    CHECK(r.time_limit > 0);
  }
}

TEST_CASE("oracles") {
  CHECK(periodic_resolution_oracle(2, Q, 5) == std::vector<long>{2, 1, 1, 1, 1});
  CHECK(periodic_resolution_oracle(2, Field::prime(2), 4) == std::vector<long>{2, 2, 2, 2});
  CHECK(periodic_resolution_oracle(3, Q, 3) == std::vector<long>{3, 2, 2});
  CHECK(monomial_oracle(-2) == std::pair<long, long>(0, 1));
  CHECK(monomial_oracle(3) == std::pair<long, long>(4, 0));
  CHECK(monomial_oracle(-1) == std::pair<long, long>(0, 0));
}
