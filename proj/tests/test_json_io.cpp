#include <doctest.h>

#include "cherednik/json_io.hpp"

using namespace cherednik;

TEST_CASE("scalar round trips") {
  Rational r = make_rational(-7, 12);
  CHECK(to_json(r) == "-7/12");
  CHECK(rational_from_json(to_json(r)) == r);
  CHECK(rational_from_json(Json(3)) == 3);
  CycloNum z = CycloNum::zeta(5, 2) + CycloNum(make_rational(1, 3));
  CHECK(cyclo_from_json(to_json(z)) == z);
  CHECK(to_json(CycloNum(2)).dump() == R"({"order":1,"coeffs":["2"]})");
  CHECK_THROWS_AS(cyclo_from_json(Json::parse(R"({"order":3,"coeffs":["1","0","0","1"]})")), InvalidInput);
}

TEST_CASE("Schur element round trip") {
  for (const char* spec : {"h3", "b2", "grpn:3,1,2"}) {
    CAPTURE(spec);
    auto g = ReflectionGroup::build(parse_group_spec(spec));
    auto strata = compute_strata(g);
    auto el = q_index(g, strata, strata.open_index);
    auto j = to_json(el);
    auto back = schur_from_json(Json::parse(j.dump()));
    CHECK(back.poly == el.poly);
    CHECK(back.text() == el.text());
    CHECK(to_json(back) == j);
  }
}

TEST_CASE("support result round trip") {
  auto g = ReflectionGroup::build(parse_group_spec("a3"));
  auto strata = compute_strata(g);
  auto p = parse_params(g, Json::parse(R"({"c":"1/2"})"));
  auto r = support_via_schur(g, strata, p);
  auto j = to_json(r, strata, param_vars(g), "schur");
  auto back = support_from_json(Json::parse(j.dump()), strata);
  CHECK(to_json(back, strata, param_vars(g), "schur") == j);
  CHECK(j["strata"][0]["witnesses"][0]["hyperplane"].get<std::string>().find("c_x1") != std::string::npos);
  CHECK(param_point_from_json(to_json(p)).values == p.values);
}

TEST_CASE("parameter parsing") {
  auto b2 = ReflectionGroup::build(parse_group_spec("grpn:2,1,2"));
  auto p = parse_params(b2, Json::parse(R"({"c":{"x.1":"1/2","y1":"1/3"}})"));
  CHECK(p.values[b2.coord_index("x1")] == make_rational(1, 2));
  CHECK(p.values[b2.coord_index("y1")] == make_rational(1, 3));
  auto q = parse_params(b2, Json::parse(R"({"gr1n":{"c0":"1/3","d":["0","-1"]}})"));
  CHECK(q.values[b2.coord_index("y1")] == make_rational(1, 3));
  CHECK(q.values[b2.coord_index("x1")] == make_rational(1, 2));
  CHECK_THROWS_AS(parse_params(b2, Json::parse(R"({"c":{"z1":"1"}})")), InvalidInput);
  CHECK_THROWS_AS(parse_params(b2, Json::parse(R"({"gr1n":{"c0":"1/3","d":["0"]}})")), InvalidInput);
}
