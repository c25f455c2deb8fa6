#include <doctest.h>

#include <set>

#include "cherednik/strata.hpp"

using namespace cherednik;

namespace {

std::vector<int> pointwise_stabilizer(const ReflectionGroup& g, const Mat& basis) {
  std::vector<int> out;
  for (int w = 0; w < static_cast<int>(g.size()); ++w) {
    Mat m = g.matrix(w);
    bool fixes = true;
    for (const auto& v : basis)
      if (mat_vec(m, v) != v) fixes = false;
    if (fixes) out.push_back(w);
  }
  return out;
}

std::multiset<std::string> types(const StrataData& s) {
  std::multiset<std::string> t;
  for (const auto& st : s.strata) t.insert(st.type);
  return t;
}

}  // namespace

TEST_CASE("strata of small groups") {
  auto z2 = ReflectionGroup::cyclic(2);
  auto s = compute_strata(z2);
  CHECK(s.strata.size() == 2);
  CHECK(s.strata[s.origin_index].parabolic.size() == 2);
  CHECK(s.strata[s.open_index].parabolic.size() == 1);

  auto b2 = ReflectionGroup::grpn(2, 1, 2);
  CHECK(compute_strata(b2).strata.size() == 4);

  auto s3 = ReflectionGroup::grpn(1, 1, 3);
  auto ss = compute_strata(s3);
  CHECK(ss.strata.size() == 3);
  CHECK(ss.strata[ss.origin_index].flat_basis.size() == 1);

  auto h3 = ReflectionGroup::build(parse_group_spec("h3"));
  auto sh = compute_strata(h3);
  CHECK(types(sh) == std::multiset<std::string>{"1", "A1", "A1^2", "A2", "H2", "H3"});
  auto f4 = ReflectionGroup::build(parse_group_spec("f4"));
  CHECK(compute_strata(f4).strata.size() == 12);
}

TEST_CASE("parabolics are pointwise stabilizers and the closure order is bounded") {
  for (const char* spec : {"a3", "b3", "i2:5", "grpn:3,1,2", "grpn:2,1,3", "grpn:4,2,2"}) {
    CAPTURE(spec);
    auto g = ReflectionGroup::build(parse_group_spec(spec));
    auto s = compute_strata(g);
    for (const auto& st : s.strata) {
      CHECK(st.parabolic == pointwise_stabilizer(g, st.flat_basis));
      CHECK(st.parabolic == generated_subgroup(g, st.reflections));
    }
    for (std::size_t a = 0; a < s.strata.size(); ++a) {
      CHECK(s.leq[s.origin_index][a]);
      CHECK(s.leq[a][s.open_index]);
      CHECK(s.leq[a][a]);
      for (std::size_t b = 0; b < s.strata.size(); ++b)
        if (a != b && s.leq[a][b]) CHECK(!s.leq[b][a]);
    }
  }
}
