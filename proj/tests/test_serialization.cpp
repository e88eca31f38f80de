#include <doctest.h>

#include "qknot/coefficients.hpp"
#include "qknot/errors.hpp"
#include "qknot/oracles.hpp"
#include "qknot/serialization.hpp"
#include "qknot/universal.hpp"
#include "qknot/vassiliev.hpp"

using namespace qknot;

namespace {

template <class F>
void expect_parse_error(F&& f) {
  try {
    f();
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

}  // namespace

TEST_CASE("series and tables round-trip") {
  BivariateSeries s = f_infinity(knot_table("trefoil"), 3);
  Json j = series_to_json(s);
  CHECK(j["D"] == 3);
  CHECK(series_from_json(j) == s);
  CHECK(series_from_json(Json::parse(j.dump())) == s);

  CoefficientTable b = b_table(knot_table("figure8"), 3);
  CHECK(table_from_json(table_to_json(b)) == b);
  CoefficientTable d = d_table(cached_ado(knot_table("trefoil"), 3), 3);
  CHECK(table_from_json(table_to_json(d)) == d);
  CoefficientTable c = c_table(b_table(knot_table("trefoil"), 5),
                               lambda_tilde_row(lambda_coeffs(alexander(knot_table("trefoil")), 5), 3, 5), 5);
  CoefficientTable cl = cl_digits(c, 3, 1);
  CHECK(table_from_json(table_to_json(cl)) == cl);
  CHECK(table_to_csv(b_table(knot_table("unknot"), 2)) == "n,m,value\n0,0,1\n");
  CHECK(table_to_csv(cl).rfind("j,i,m,value\n", 0) == 0);
}

TEST_CASE("big integers survive as strings") {
  BivariateSeries s(1);
  s.set(0, 0, from_decimal("123456789012345678901234567890"));
  Json j = series_to_json(s);
  CHECK(j.dump().find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(series_from_json(j) == s);
}

TEST_CASE("cyclotomic, ADO and Laurent round-trip") {
  CyclotomicInt z = CyclotomicInt::from_coords(5, {3, -1, 0, 7});
  CHECK(cyclotomic_from_json(cyclotomic_to_json(z)) == z);
  AdoPolynomial a = ado(knot_table("trefoil"), 3);
  CHECK(ado_from_json(ado_to_json(a)) == a);
  LaurentPoly p = alexander(knot_table("figure8"));
  CHECK(laurent_from_json(laurent_to_json(p)) == p);
  CHECK(laurent_from_json(laurent_to_json(alexander_halves(BraidWord::parse("1 1")))).variable() == Variable::qa);
  CHECK(laurent_to_csv(p) == "exponent,value\n-1,-1\n0,3\n1,-1\n");
}

TEST_CASE("combinations round-trip") {
  KnotCombination c = resolve_singular(SingularBraidWord(BraidWord::parse("1 -2 1 -2"), {0, 3}));
  CHECK(combination_from_json(combination_to_json(c)).terms() == c.terms());
  Json j = Json::parse(R"([{"braid": "1 1 1", "coeff": "-2"}])");
  KnotCombination k = combination_from_json(j);
  CHECK(k.terms().at(BraidWord::parse("1 1 1")) == -2);
}

TEST_CASE("malformed input raises ParseError") {
  expect_parse_error([] { series_from_json(Json::parse(R"({"D": 2, "coeffs": [[0, 0, "x"]]})")); });
  expect_parse_error([] { series_from_json(Json::parse(R"({"coeffs": []})")); });
  expect_parse_error([] { series_from_json(Json::parse(R"({"D": 1, "coeffs": [[3, 0, "1"]]})")); });
  expect_parse_error([] { cyclotomic_from_json(Json::parse(R"({"conductor": 3})")); });
  expect_parse_error([] { ado_from_json(Json::parse(R"([1, 2])")); });
  expect_parse_error([] { combination_from_json(Json::parse(R"([{"braid": "1 y", "coeff": "1"}])")); });
  expect_parse_error([] { laurent_from_json(Json::parse(R"({"variable": "z", "terms": []})")); });
  expect_parse_error([] { table_from_json(Json::parse(R"({"kind": "e"})")); });
}

TEST_CASE("reports") {
  CheckReport r = check_unified_vs_ado(named_knot("trefoil"), 3, 5, 2);
  Json j = report_to_json(r);
  CHECK(j["check"] == "factorization");
  CHECK(j["knot"] == "trefoil");
  CHECK(j["r"] == 3);
  CHECK(j["status"] == "pass");
  CHECK(j["per_m"].size() == 3);
  CHECK(j["per_m"][0]["m"] == 0);
  CHECK(j["per_m"][0]["precision"] == 6);

  SamplerConfig cfg;
  cfg.samples = 3;
  VassilievReport v = degree_vanishing_check(Functional::parse("b:0,1"), 1, cfg);
  Json jv = report_to_json(v);
  CHECK(jv["status"] == "pass");
  CHECK(jv["samples"].size() == 3);
  CHECK(report_to_json(degree_vanishing_check(Functional::parse("b:0,1"), 1, cfg)).dump() == jv.dump());
}
