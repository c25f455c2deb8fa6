#include <doctest.h>

#include "cherednik/errors.hpp"
#include "cherednik/laurent.hpp"

using namespace cherednik;

namespace {
const std::vector<std::string> kXY = {"x", "y"};
LaurentPoly X() { return LaurentPoly::variable(kXY, 0); }
LaurentPoly Y() { return LaurentPoly::variable(kXY, 1); }
}  // namespace

TEST_CASE("basic arithmetic") {
  LaurentPoly p = (X() + 1) * (X() - 1);
  CHECK(p == X() * X() - 1);
  CHECK(p.str() == "x^2 - 1");
  CHECK((X() + Y()).pow(2) == X() * X() + X() * Y() * 2 + Y() * Y());
  CHECK(LaurentPoly(3) * X() == X() + X() + X());
  CHECK((X() - X()).is_zero());
}

TEST_CASE("exact division") {
  LaurentPoly a = (X() * Y() + 1) * (X() - Y()) * (Y() * Y() - X());
  auto q = a.divide_exact(X() - Y());
  REQUIRE(q);
  CHECK(*q == (X() * Y() + 1) * (Y() * Y() - X()));
  CHECK(!a.divide_exact(X() + 2));
  LaurentPoly xi = LaurentPoly::monomial(kXY, {-1, 0});
  auto q2 = (X() * X() - 1).divide_exact(X() - xi);
  REQUIRE(q2);
  CHECK(*q2 == X());
  CHECK_THROWS_AS(X().divide_exact(LaurentPoly(kXY)), DivisionByZero);
}

TEST_CASE("division by cyclotomic factors") {
  std::vector<std::string> q = {"q"};
  LaurentPoly x = LaurentPoly::variable(q, 0);
  for (int n : {2, 3, 5, 6, 10, 12}) {
    LaurentPoly phi(q);
    const auto& c = cyclotomic_coefficients(n);
    for (std::size_t i = 0; i < c.size(); ++i) phi.add_term({static_cast<int>(i)}, CycloNum(c[i]));
    auto r = (x.pow(n) - 1).divide_exact(phi);
    REQUIRE(r);
    CHECK(*r * phi == x.pow(n) - 1);
  }
}

TEST_CASE("units and substitution") {
  LaurentPoly a = (X() + Y()) * LaurentPoly::monomial(kXY, {-2, 3}, CycloNum::zeta(3));
  CHECK(a.equal_up_to_unit(X() + Y()));
  CHECK(!a.equal_up_to_unit(X() - Y()));
  auto [e, c] = a.unit_part();
  CHECK(a == (a.unit_normalized() * LaurentPoly::monomial(kXY, e, c)));

  std::vector<std::string> t = {"t"};
  LaurentPoly tt = LaurentPoly::variable(t, 0);
  LaurentPoly s = (X() * Y() - X()).substitute({{"x", tt * 2}, {"y", LaurentPoly::monomial(t, {-1})}}, t);
  CHECK(s == LaurentPoly::constant(t, 2) - tt * 2);
  CHECK((X() * Y()).eval({{"x", CycloNum(2)}, {"y", CycloNum::zeta(4)}}) == CycloNum::zeta(4) * 2);
  LaurentPoly w = X().with_vars({"w", "x", "y"});
  CHECK(w.min_exponents() == Exponent{0, 1, 0});
}

TEST_CASE("monomial parsing") {
  CHECK(parse_monomial("x^2*y", kXY) == Exponent{2, 1});
  CHECK(parse_monomial("1", kXY) == Exponent{0, 0});
  CHECK(parse_monomial("y^-1 * x", kXY) == Exponent{1, -1});
  CHECK_THROWS_AS(parse_monomial("z", kXY), InvalidInput);
  CHECK(format_monomial({1, -1}, kXY) == "x*y^-1");
}
