#include <doctest.h>

#include <random>

#include "cherednik/cyclo.hpp"
#include "cherednik/errors.hpp"

using namespace cherednik;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_coefficients(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_coefficients(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_coefficients(12) == std::vector<long>{1, 0, -1, 0, 1});
  // Phi_105 is the first with a coefficient of absolute value 2
  const auto& p = cyclotomic_coefficients(105);
  CHECK(p.size() == 49);
  CHECK(std::count(p.begin(), p.end(), -2) == 2);
}

TEST_CASE("roots of unity") {
  CHECK(CycloNum::zeta(3) + CycloNum::zeta(3, 2) + 1 == CycloNum(0));
  CHECK(CycloNum::zeta(4).pow(2) == CycloNum(-1));
  CHECK(CycloNum::zeta(5).inv() == CycloNum::zeta(5, 4));
  CHECK(CycloNum::zeta(6) == -CycloNum::zeta(3, 2));
  CHECK(CycloNum::two_cos(8).pow(2) == CycloNum(2));
  CHECK(CycloNum::two_cos(10) * CycloNum::two_cos(10) == CycloNum::two_cos(10) + 1);
  CHECK(CycloNum::zeta(12, 3) == CycloNum::zeta(4));
  CHECK(CycloNum::zeta(12, 12).is_one());
  CHECK(CycloNum::zeta(7).conj() == CycloNum::zeta(7, 6));
  CHECK_THROWS_AS(CycloNum(0).inv(), DivisionByZero);
}

TEST_CASE("mixed orders") {
  CycloNum a = CycloNum::zeta(3) + CycloNum::zeta(4);
  CHECK(a.order() == 12);
  CHECK(a - CycloNum::zeta(4) == CycloNum::zeta(3));
  CHECK((a - CycloNum::zeta(4)).reduced().order() == 3);
  CHECK(CycloNum::zeta(10).reduced().order() == 5);
  CHECK((CycloNum::zeta(9, 3)).reduced().order() == 3);
}

TEST_CASE("root of unity angle") {
  CHECK(CycloNum::zeta(12, 5).root_of_unity_angle() == make_rational(5, 12));
  CHECK(CycloNum(-1).root_of_unity_angle() == make_rational(1, 2));
  CHECK((-CycloNum::zeta(3)).root_of_unity_angle() == make_rational(5, 6));
  CHECK(CycloNum(1).root_of_unity_angle() == Rational(0));
  CHECK(!CycloNum(2).root_of_unity_angle());
  CHECK(!(CycloNum::zeta(5) + 1).root_of_unity_angle());
}

namespace {

CycloNum random_cyclo(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rational> c(static_cast<std::size_t>(totient(n)));
  for (auto& x : c) x = make_rational(d(rng), 1 + std::abs(d(rng)));
  return CycloNum(n, c);
}

}  // namespace

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  const int orders[] = {1, 3, 4, 5, 8, 12, 15};
  for (int trial = 0; trial < 60; ++trial) {
    int n1 = orders[trial % 7], n2 = orders[(trial * 3 + 1) % 7], n3 = orders[(trial * 5 + 2) % 7];
    CycloNum a = random_cyclo(rng, n1), b = random_cyclo(rng, n2), c = random_cyclo(rng, n3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == CycloNum(0));
    if (!a.is_zero()) CHECK(a * a.inv() == CycloNum(1));
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9);
    CHECK(a.hash_at(120) == a.lifted(120).hash_at(120));
  }
}

TEST_CASE("string form") {
  CHECK(CycloNum(make_rational(1, 2)).str() == "1/2");
  CHECK((CycloNum(make_rational(1, 2)) + CycloNum::zeta(12, 2) * 3).str() == "1/2 + 3*z12^2");
}
