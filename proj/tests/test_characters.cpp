#include <doctest.h>

#include <algorithm>

#include "cherednik/characters.hpp"

using namespace cherednik;

namespace {

std::vector<int> class_sizes(const ConjugacyClasses& cc) {
  std::vector<int> out;
  for (const auto& c : cc.classes) out.push_back(static_cast<int>(c.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> dims(const CharacterData& ch) {
  std::vector<int> out;
  for (const auto& ir : ch.irreps()) out.push_back(ir.dim);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("conjugacy classes") {
  auto s3 = ReflectionGroup::build(parse_group_spec("a2"));
  CHECK(class_sizes(conjugacy_classes(s3)) == std::vector<int>{1, 2, 3});
  CHECK(conjugacy_classes(ReflectionGroup::build(parse_group_spec("b2"))).classes.size() == 5);
  CHECK(conjugacy_classes(ReflectionGroup::build(parse_group_spec("h3"))).classes.size() == 10);
  CHECK(conjugacy_classes(ReflectionGroup::build(parse_group_spec("f4"))).classes.size() == 25);
}

TEST_CASE("character tables") {
  auto z2 = ReflectionGroup::cyclic(2);
  auto c2 = compute_characters(z2);
  REQUIRE(c2.exact());
  CHECK(dims(c2) == std::vector<int>{1, 1});
  CHECK(c2.find_power_of_det(z2) == 1);
  auto e = c2.projector(1);
  CHECK(e[0] == CycloNum(make_rational(1, 2)));
  CHECK(e[1] == CycloNum(make_rational(-1, 2)));

  CHECK(dims(compute_characters(ReflectionGroup::build(parse_group_spec("a2")))) == std::vector<int>{1, 1, 2});
  auto i25 = ReflectionGroup::build(parse_group_spec("i2:5"));
  auto ci = compute_characters(i25);
  REQUIRE(ci.exact());
  CHECK(dims(ci) == std::vector<int>{1, 1, 2, 2});
  bool has_golden = false;
  for (const auto& ir : ci.irreps())
    for (const auto& v : ir.values)
      if (v == CycloNum::two_cos(5) || v == CycloNum::two_cos(5, 2)) has_golden = true;
  CHECK(has_golden);

  for (const char* name : {"b2", "a3", "h3", "f4", "grpn:3,1,2", "grpn:4,2,2", "cyclic:5"}) {
    auto g = ReflectionGroup::build(parse_group_spec(name));
    auto ch = compute_characters(g, 7);
    CHECK_MESSAGE(ch.exact(), name);
    CHECK_MESSAGE(ch.size() == ch.classes().classes.size(), name);
    CHECK_MESSAGE(ch.irreps()[0].dim == 1, name);
    CHECK_MESSAGE(ch.find_power_of_det(g) >= 0, name);
  }
}

TEST_CASE("projectors are orthogonal idempotents") {
  auto g = ReflectionGroup::build(parse_group_spec("a2"));
  auto ch = compute_characters(g);
  std::size_t n = g.size();
  auto mul = [&](const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) {
    std::vector<CycloNum> out(n, CycloNum(0));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (!a[x].is_zero() && !b[y].is_zero())
          out[g.multiply(static_cast<int>(x), static_cast<int>(y))] += a[x] * b[y];
    return out;
  };
  std::vector<CycloNum> sum(n, CycloNum(0));
  for (std::size_t f = 0; f < ch.size(); ++f) {
    auto e = ch.projector(f);
    CHECK(mul(e, e) == e);
    for (std::size_t f2 = f + 1; f2 < ch.size(); ++f2) {
      auto z = mul(e, ch.projector(f2));
      CHECK(std::all_of(z.begin(), z.end(), [](const CycloNum& v) { return v.is_zero(); }));
    }
    for (std::size_t w = 0; w < n; ++w) sum[w] += e[w];
  }
  CHECK(sum[0] == CycloNum(1));
  for (std::size_t w = 1; w < n; ++w) CHECK(sum[w].is_zero());
  // acting on the reflection representation, the standard projector is the identity
  auto e_std = ch.projector(ch.size() - 1);
  REQUIRE(ch.irreps().back().dim == 2);
  auto m = group_algebra_action(e_std, [&](int w) { return g.matrix(w); }, g.rank());
  int trace_num = 0;
  CycloNum tr(0);
  for (std::size_t i = 0; i < g.rank(); ++i) tr += m[i][i];
  trace_num = static_cast<int>(tr.to_rational().get_num().get_si());
  CHECK(trace_num == 2);
}

TEST_CASE("c-functions") {
  auto z2 = ReflectionGroup::cyclic(2);
  auto c2 = compute_characters(z2);
  CHECK(c_function(z2, c2, 0).coeffs == std::vector<CycloNum>{CycloNum(0)});
  CHECK(c_function(z2, c2, 1).coeffs == std::vector<CycloNum>{CycloNum(2)});

  auto s3 = ReflectionGroup::grpn(1, 1, 3);
  auto c3 = compute_characters(s3);
  int sign = c3.find_power_of_det(s3);
  REQUIRE(sign > 0);
  CHECK(c_function(s3, c3, sign).coeffs == std::vector<CycloNum>{CycloNum(6)});
  for (std::size_t f = 0; f < c3.size(); ++f)
    if (c3.irreps()[f].dim == 2) CHECK(c_function(s3, c3, f).coeffs == std::vector<CycloNum>{CycloNum(3)});

  // coefficients are nonnegative rationals n_H * (dim of chi-isotypic part) / dim E
  for (const char* name : {"b2", "grpn:3,1,2", "cyclic:4", "h3"}) {
    auto g = ReflectionGroup::build(parse_group_spec(name));
    auto ch = compute_characters(g);
    for (std::size_t f = 0; f < ch.size(); ++f) {
      auto cf = c_function(g, ch, f);
      for (const auto& v : cf.coeffs) {
        REQUIRE_MESSAGE(v.is_rational(), name);
        CHECK_MESSAGE(v.to_rational() >= 0, name);
      }
    }
  }
}
