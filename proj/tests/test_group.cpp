#include <doctest.h>

#include <set>

#include "cherednik/errors.hpp"
#include "cherednik/group.hpp"

using namespace cherednik;

namespace {

void check_closure(const ReflectionGroup& g) {
  std::size_t n = g.size();
  for (std::size_t a = 0; a < n; a += std::max<std::size_t>(1, n / 40))
    for (std::size_t b = 0; b < n; b += std::max<std::size_t>(1, n / 40)) {
      int ab = g.multiply(static_cast<int>(a), static_cast<int>(b));
      CHECK(g.matrix(ab) == mat_mul(g.matrix(static_cast<int>(a)), g.matrix(static_cast<int>(b))));
    }
  for (std::size_t a = 0; a < n; ++a) CHECK(g.multiply(static_cast<int>(a), g.inverse(static_cast<int>(a))) == 0);
}

std::size_t reflection_count_from_hyperplanes(const ReflectionGroup& g) {
  std::size_t s = 0;
  for (const auto& h : g.hyperplanes()) s += static_cast<std::size_t>(h.order - 1);
  return s;
}

}  // namespace

TEST_CASE("coxeter groups") {
  struct Row {
    const char* spec;
    std::size_t order, refl, orbits;
  } rows[] = {{"a2", 6, 3, 1}, {"b2", 8, 4, 2}, {"h3", 120, 15, 1}, {"f4", 1152, 24, 2},
              {"i2:5", 10, 5, 1}, {"i2:6", 12, 6, 2}, {"a3", 24, 6, 1}, {"d4", 192, 12, 1}};
  for (const auto& r : rows) {
    auto g = ReflectionGroup::build(parse_group_spec(r.spec));
    CAPTURE(r.spec);
    CHECK(g.size() == r.order);
    CHECK(g.reflections().size() == r.refl);
    CHECK(g.orbits().size() == r.orbits);
    CHECK(reflection_count_from_hyperplanes(g) == r.refl);
    if (g.size() <= 200) check_closure(g);
  }
}

TEST_CASE("G(r,p,n) and cyclic groups") {
  auto s3 = ReflectionGroup::grpn(1, 1, 3);
  CHECK(s3.size() == 6);
  CHECK(s3.rank() == 3);
  CHECK(s3.coords().size() == 1);

  auto b2 = ReflectionGroup::grpn(2, 1, 2);
  CHECK(b2.size() == 8);
  CHECK(b2.orbits().size() == 2);
  CHECK(b2.orbits()[0].label == "x");
  CHECK(b2.generator_orbit(0) == 0);
  CHECK(b2.generator_orbit(1) == 1);

  auto g312 = ReflectionGroup::grpn(3, 1, 2);
  CHECK(g312.size() == 18);
  CHECK(g312.coords().size() == 3);
  std::multiset<int> nh;
  for (const auto& o : g312.orbits()) nh.insert(o.n_H);
  CHECK(nh == std::multiset<int>{2, 3});
  CHECK(g312.coord_index("x.2") == g312.coord_index("x2"));
  check_closure(g312);

  auto g422 = ReflectionGroup::grpn(4, 2, 2);
  CHECK(g422.size() == 16);
  CHECK(reflection_count_from_hyperplanes(g422) == g422.reflections().size());

  auto z2 = ReflectionGroup::cyclic(2);
  CHECK(z2.size() == 2);
  CHECK(z2.coords().size() == 1);
  CHECK(z2.coords()[0].name == "x1");
  auto z5 = ReflectionGroup::cyclic(5);
  CHECK(z5.coords().size() == 4);
  CHECK(z5.hyperplanes()[0].order == 5);

  auto g = ReflectionGroup::grpn(3, 1, 3);
  CHECK(g.size() == 162);
}

TEST_CASE("hyperplane orbits are conjugation invariant") {
  for (const char* spec : {"b3", "f4", "grpn:3,1,2", "i2:6"}) {
    auto g = ReflectionGroup::build(parse_group_spec(spec));
    for (int w = 0; w < static_cast<int>(g.size()); w += 7)
      for (std::size_t h = 0; h < g.hyperplanes().size(); ++h)
        CHECK(g.hyperplanes()[g.act_hyperplane(w, static_cast<int>(h))].orbit == g.hyperplanes()[h].orbit);
  }
}

TEST_CASE("reflection parameters") {
  auto z3 = ReflectionGroup::cyclic(3);
  auto cr = z3.reflection_params<CycloNum>({CycloNum(1), CycloNum(0)});
  // c_{H,j} = (1/n) sum_r c_r (1 - chi_j(r)) recovers the coordinates
  for (int j = 1; j <= 2; ++j) {
    CycloNum s(0);
    for (std::size_t k = 0; k < cr.size(); ++k)
      s += cr[k] * (CycloNum(1) - z3.reflection_eigenvalue(z3.reflections()[k]).pow(j));
    CHECK(s / CycloNum(3) == (j == 1 ? CycloNum(1) : CycloNum(0)));
  }
  auto a2 = ReflectionGroup::build(parse_group_spec("a2"));
  for (const auto& c : a2.reflection_params<CycloNum>({CycloNum(make_rational(1, 3))})) CHECK(c == CycloNum(make_rational(1, 3)));
}

TEST_CASE("spec parsing errors") {
  CHECK_THROWS_AS(parse_group_spec("q7"), InvalidInput);
  CHECK_THROWS_AS(parse_group_spec("grpn:4,3,2"), InvalidInput);
  CHECK_THROWS_AS(ReflectionGroup::build(parse_group_spec("coxeter:[[1,3,3],[3,1,3],[3,3,1]]")), InvalidInput);
  CHECK(parse_group_spec(R"({"kind":"grpn","r":2,"p":1,"n":2})").n == 2);
}
