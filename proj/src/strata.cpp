#include "cherednik/strata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace cherednik {

namespace {

struct Flat {
  Mat rows;  // rref of the span of the alphas
  std::vector<std::size_t> pivots;
  std::vector<int> hyperplanes;
};

Flat close_flat(const ReflectionGroup& g, Mat rows) {
  Flat f;
  f.pivots = rref(rows);
  f.rows = std::move(rows);
  const auto& hs = g.hyperplanes();
  for (std::size_t h = 0; h < hs.size(); ++h)
    if (in_rowspace(f.rows, f.pivots, hs[h].alpha)) f.hyperplanes.push_back(static_cast<int>(h));
  return f;
}

std::string component_type(const std::vector<std::vector<int>>& m, const std::vector<int>& comp) {
  std::size_t k = comp.size();
  if (k == 1) return "A1";
  std::vector<int> degree(k, 0);
  std::vector<int> big;  // labels > 3
  int edges = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      int v = m[comp[a]][comp[b]];
      if (v == 2) continue;
      ++edges;
      ++degree[a];
      ++degree[b];
      if (v > 3) big.push_back(v);
    }
  if (k == 2) {
    int v = m[comp[0]][comp[1]];
    if (v == 3) return "A2";
    if (v == 4) return "B2";
    if (v == 5) return "H2";
    if (v == 6) return "G2";
    return "I2(" + std::to_string(v) + ")";
  }
  if (edges != static_cast<int>(k) - 1) return "?";
  int branch = static_cast<int>(std::count_if(degree.begin(), degree.end(), [](int d) { return d >= 3; }));
  std::string n = std::to_string(k);
  if (big.empty() && branch == 0) return "A" + n;
  if (big.empty() && branch == 1) {
    // D_n has a branch node with two arms of length one; E_n has arms 1,2,k-4
    std::size_t c = 0;
    while (degree[c] < 3) ++c;
    std::vector<int> arms;
    for (std::size_t nb = 0; nb < k; ++nb) {
      if (nb == c || m[comp[c]][comp[nb]] == 2) continue;
      int len = 1;
      std::size_t prev = c, cur = nb;
      while (true) {
        std::size_t next = k;
        for (std::size_t t = 0; t < k; ++t)
          if (t != prev && t != cur && m[comp[cur]][comp[t]] != 2) next = t;
        if (next == k) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return "D" + n;
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2) return "E" + n;
    return "?";
  }
  if (big.size() == 1 && branch == 0) {
    int v = big[0];
    // find whether the special edge is at an end of the path
    bool at_end = false;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if (a != b && m[comp[a]][comp[b]] == v && (degree[a] == 1 || degree[b] == 1)) at_end = true;
    if (v == 4 && at_end) return "B" + n;
    if (v == 4 && k == 4) return "F4";
    if (v == 5 && at_end && k <= 4) return "H" + n;
  }
  return "?";
}

}  // namespace

int StrataData::find(const std::string& id) const {
  for (std::size_t i = 0; i < strata.size(); ++i)
    if (strata[i].id == id) return static_cast<int>(i);
  return -1;
}

std::vector<int> generated_subgroup(const ReflectionGroup& g, const std::vector<int>& gens) {
  std::vector<char> seen(g.size(), 0);
  std::vector<int> out = {0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int s : gens) {
      int x = g.multiply(s, out[i]);
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string coxeter_type_name(const std::vector<std::vector<int>>& m, const std::vector<int>& subset) {
  if (subset.empty()) return "1";
  std::vector<int> comp_of(subset.size(), -1);
  std::vector<std::vector<int>> comps;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (comp_of[i] >= 0) continue;
    comp_of[i] = static_cast<int>(comps.size());
    comps.push_back({subset[i]});
    std::vector<std::size_t> stack = {i};
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < subset.size(); ++b)
        if (comp_of[b] < 0 && m[subset[a]][subset[b]] != 2) {
          comp_of[b] = comp_of[i];
          comps.back().push_back(subset[b]);
          stack.push_back(b);
        }
    }
  }
  std::map<std::string, int> counts;
  for (auto& c : comps) {
    std::sort(c.begin(), c.end());
    ++counts[component_type(m, c)];
  }
  std::string out;
  for (const auto& [name, cnt] : counts) {
    out += name;
    if (cnt > 1) out += "^" + std::to_string(cnt);
  }
  return out;
}

StrataData compute_strata(const ReflectionGroup& g) {
  const auto& hs = g.hyperplanes();
  std::size_t nh = hs.size();
  std::size_t n = g.rank();
  std::vector<std::vector<int>> hperm(g.num_generators(), std::vector<int>(nh));
  for (std::size_t s = 0; s < g.num_generators(); ++s)
    for (std::size_t h = 0; h < nh; ++h) hperm[s][h] = g.act_hyperplane(g.generator(s), static_cast<int>(h));

  std::map<std::vector<int>, int> orbit_of;          // hyperplane set -> orbit id
  std::vector<std::vector<std::vector<int>>> members;  // orbit -> member sets
  std::vector<Flat> reps;
  auto add_orbit = [&](Flat f) {
    int id = static_cast<int>(reps.size());
    std::vector<std::vector<int>> mem = {f.hyperplanes};
    orbit_of.emplace(f.hyperplanes, id);
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t s = 0; s < hperm.size(); ++s) {
        std::vector<int> img;
        img.reserve(mem[i].size());
        for (int h : mem[i]) img.push_back(hperm[s][h]);
        std::sort(img.begin(), img.end());
        if (orbit_of.emplace(img, id).second) mem.push_back(std::move(img));
      }
    members.push_back(std::move(mem));
    reps.push_back(std::move(f));
  };

  add_orbit(close_flat(g, Mat{}));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t h = 0; h < nh; ++h) {
      if (std::binary_search(reps[i].hyperplanes.begin(), reps[i].hyperplanes.end(), static_cast<int>(h))) continue;
      Mat rows = reps[i].rows;
      rows.push_back(hs[h].alpha);
      Flat f = close_flat(g, std::move(rows));
      if (!orbit_of.count(f.hyperplanes)) add_orbit(std::move(f));
    }
  }

  StrataData out;
  std::vector<std::size_t> order(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return reps[a].pivots.size() < reps[b].pivots.size(); });
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Flat& f = reps[order[k]];
    Stratum s;
    s.id = "S" + std::to_string(k);
    s.codim = f.pivots.size();
    s.hyperplanes = f.hyperplanes;
    s.orbit_size = members[order[k]].size();
    Mat sys = f.rows;
    if (sys.empty()) sys = Mat{Vec(n, CycloNum(0))};
    s.flat_basis = nullspace(sys);
    std::vector<int> gens;
    for (int h : f.hyperplanes) gens.push_back(hs[h].rotation_generator);
    s.parabolic = generated_subgroup(g, gens);
    for (int w : s.parabolic)
      if (g.is_reflection(w)) s.reflections.push_back(w);
    out.strata.push_back(std::move(s));
  }
  std::size_t m = out.strata.size();
  out.leq.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const auto& target = out.strata[b].hyperplanes;
      for (const auto& mem : members[order[a]])
        if (std::includes(mem.begin(), mem.end(), target.begin(), target.end())) {
          out.leq[a][b] = true;
          break;
        }
    }
  out.open_index = 0;
  out.origin_index = static_cast<int>(m) - 1;

  if (g.has_coxeter_generators()) {
    const auto cm = g.coxeter_matrix();
    std::size_t r = g.num_generators();
    std::vector<int> inv(reps.size());
    for (std::size_t k = 0; k < order.size(); ++k) inv[order[k]] = static_cast<int>(k);
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      Mat rows;
      std::vector<int> subset;
      for (std::size_t s = 0; s < r; ++s)
        if (mask & (1u << s)) {
          subset.push_back(static_cast<int>(s));
          rows.push_back(hs[g.hyperplane_of(g.generator(s))].alpha);
        }
      Flat f = close_flat(g, std::move(rows));
      auto& st = out.strata[inv[orbit_of.at(f.hyperplanes)]];
      if (st.type.empty() || subset.size() < st.standard_subset.size()) {
        st.standard_subset = subset;
        st.type = coxeter_type_name(cm, subset);
      }
    }
  }
  return out;
}

}  // namespace cherednik
