#include <doctest.h>

#include "cherednik/cyclofactor.hpp"
#include "cherednik/errors.hpp"

using namespace cherednik;

namespace {
LaurentPoly Q() { return LaurentPoly::variable({"q"}, 0); }
LaurentPoly one_q() { return LaurentPoly::constant({"q"}, CycloNum(1)); }
}  // namespace

TEST_CASE("phi labels") {
  CHECK(phi_poly("Phi2") == Q() + 1);
  CHECK(phi_poly("Phi4''") == Q() - LaurentPoly::constant({"q"}, CycloNum::zeta(4).inv()));
  LaurentPoly p30 = one_q();
  for (int k : {1, 7, 13, 19}) p30 *= Q() - LaurentPoly::constant({"q"}, CycloNum::zeta(30, k));
  CHECK(phi_poly("Phi30'''") == p30);
  for (int n : {3, 4, 6}) {
    std::string s = std::to_string(n);
    CHECK(phi_poly("Phi" + s + "'") * phi_poly("Phi" + s + "''") == phi_poly("Phi" + s));
  }
  for (int n : {12, 30}) {
    std::string s = std::to_string(n);
    CHECK(phi_poly("Phi" + s + "'") * phi_poly("Phi" + s + "''") == phi_poly("Phi" + s));
    CHECK(phi_poly("Phi" + s + "'''") * phi_poly("Phi" + s + "''''") == phi_poly("Phi" + s));
  }
  CHECK_THROWS_AS(phi_poly("Phi5'"), InvalidInput);
  CHECK_THROWS_AS(phi_poly("Chi3"), InvalidInput);
}

TEST_CASE("cyclotomic polynomial identities up to 60") {
  for (int n = 1; n <= 60; ++n) {
    LaurentPoly xn1 = Q().pow(n) - 1;
    CHECK(xn1.divide_exact(phi_poly("Phi" + std::to_string(n))));
    LaurentPoly prod = one_q();
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod *= phi_poly("Phi" + std::to_string(d));
    CHECK(prod == xn1);
  }
}

TEST_CASE("univariate unity-root factorization") {
  auto f = factor_unity_roots(Q() * Q() + Q() + 1);
  CHECK(group_labels(f.factors).size() == 1);
  CHECK(format_groups(group_labels(f.factors), f.vars) == "Phi3 (q)");
  CHECK(f.unit_scalar == CycloNum(1));
  CHECK(f.remainder == one_q());

  auto g = factor_unity_roots(Q().pow(3) - 2);
  CHECK(g.factors.empty());
  CHECK(g.remainder == Q().pow(3) - 2);

  LaurentPoly p = phi_poly("Phi2").pow(3) * phi_poly("Phi3") * phi_poly("Phi5") * phi_poly("Phi6") * phi_poly("Phi10");
  LaurentPoly shifted = p * LaurentPoly::monomial({"q"}, {-4}, CycloNum(make_rational(-3, 2)));
  auto h = factor_unity_roots(shifted);
  CHECK(h.expand() == shifted);
  CHECK(format_groups(group_labels(h.factors), h.vars) == "Phi2^3 Phi3 Phi5 Phi6 Phi10 (q)");

  LaurentPoly mixed = phi_poly("Phi12'") * phi_poly("Phi3''") * (Q() - 5);
  auto m = factor_unity_roots(mixed);
  CHECK(m.expand() == mixed);
  CHECK(format_groups(group_labels(m.factors), m.vars) == "Phi3'' Phi12' (q)");
  CHECK(m.remainder == Q() - 5);
}

TEST_CASE("multivariate unity-root factorization") {
  std::vector<std::string> v = {"x", "y"};
  LaurentPoly x = LaurentPoly::variable(v, 0), y = LaurentPoly::variable(v, 1);
  LaurentPoly b2 = (x + 1) * (y + 1) * (x * y + 1);
  auto f = factor_unity_roots(b2);
  CHECK(f.expand() == b2);
  CHECK(format_groups(group_labels(f.factors), v) == "Phi2 (x) Phi2 (y) Phi2 (x*y)");

  LaurentPoly inv_y = LaurentPoly::monomial(v, {0, -1});
  LaurentPoly g = (x * inv_y - 1) * (x * x * y + x * y + y) * (x - 7);
  auto gf = factor_unity_roots(g);
  CHECK(gf.expand() == g);
  CHECK(gf.remainder == x - 7);
  CHECK(format_groups(group_labels(gf.factors), v) == "Phi3 (x) Phi1 (x*y^-1)");
}

TEST_CASE("label parsing round trip") {
  std::vector<std::string> v = {"x1", "y1"};
  std::string row = "Phi2 Phi3 (x1) Phi2 Phi3 (y1) Phi2^2 Phi4 Phi6 (x1*y1) Phi2 (x1*y1^2) Phi2 (x1^2*y1)";
  auto groups = parse_groups(row, v);
  CHECK(groups.size() == 5);
  CHECK(format_groups(groups, v) == row);
  auto fs = ungroup_labels(groups);
  CHECK(same_factors(fs, ungroup_labels(group_labels(fs))));
  CHECK(parse_groups("1", v).empty());
  CHECK_THROWS_AS(parse_groups("Phi2 Phi3", v), InvalidInput);
  CHECK_THROWS_AS(parse_groups("Phi7' (x1)", v), InvalidInput);
  CHECK_THROWS_AS(parse_groups("Phi2 (z1)", v), InvalidInput);
}
