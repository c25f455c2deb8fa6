#include "cherednik/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <numeric>

#include <json.hpp>

namespace cherednik {

namespace {

std::string perm_key(const int* p, std::size_t n) {
  return std::string(reinterpret_cast<const char*>(p), n * sizeof(int));
}

std::size_t vec_hash(const Vec& v, int field) {
  std::size_t h = v.size();
  for (const auto& x : v) h = h * 1000003u ^ x.hash_at(field);
  return h;
}

struct VecIndex {
  int field = 1;
  std::unordered_map<std::size_t, std::vector<int>> buckets;
  std::vector<Vec>* store = nullptr;

  int find(const Vec& v) const {
    auto it = buckets.find(vec_hash(v, field));
    if (it == buckets.end()) return -1;
    for (int i : it->second)
      if ((*store)[i] == v) return i;
    return -1;
  }
  int insert(const Vec& v) {
    int i = static_cast<int>(store->size());
    store->push_back(v);
    buckets[vec_hash(v, field)].push_back(i);
    return i;
  }
};

int entries_order(const std::vector<Mat>& gens) {
  long n = 1;
  for (const auto& g : gens)
    for (const auto& row : g)
      for (const auto& x : row) n = lcm_i64(n, x.reduced().order());
  return static_cast<int>(n);
}

Vec normalized_first_nonzero(Vec v) {
  std::size_t i = 0;
  while (i < v.size() && v[i].is_zero()) ++i;
  if (i == v.size()) throw InternalError("zero linear form");
  CycloNum inv = v[i].inv();
  for (auto& x : v) x *= inv;
  return v;
}

std::string orbit_label(std::size_t k) {
  static const char* names[] = {"x", "y", "z", "t", "u", "v", "w"};
  if (k < 7) return names[k];
  return "o" + std::to_string(k);
}

int parse_int(const std::string& s, const std::string& ctx) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); }))
    throw InvalidInput("bad integer in group spec '" + ctx + "'");
  return std::stoi(s);
}

GroupSpec spec_from_json(const nlohmann::json& j, const std::string& text) {
  GroupSpec s;
  if (!j.is_object() || !j.contains("kind")) throw InvalidInput("group spec object needs a kind: " + text);
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "coxeter") {
    s.kind = GroupKind::Coxeter;
    s.coxeter = j.at("matrix").get<std::vector<std::vector<int>>>();
    s.name = "coxeter";
  } else if (kind == "grpn") {
    s.kind = GroupKind::Grpn;
    s.r = j.at("r").get<int>();
    s.p = j.value("p", 1);
    s.n = j.at("n").get<int>();
  } else if (kind == "cyclic") {
    s.kind = GroupKind::Cyclic;
    s.n = j.at("n").get<int>();
  } else {
    throw InvalidInput("unknown group kind '" + kind + "'");
  }
  return s;
}

void validate_spec(GroupSpec& s) {
  switch (s.kind) {
    case GroupKind::Coxeter: {
      std::size_t n = s.coxeter.size();
      if (n == 0) throw InvalidInput("empty Coxeter matrix");
      for (std::size_t i = 0; i < n; ++i) {
        if (s.coxeter[i].size() != n) throw InvalidInput("Coxeter matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
          int m = s.coxeter[i][j];
          if (i == j ? m != 1 : (m < 2 || m != s.coxeter[j][i]))
            throw InvalidInput("invalid Coxeter matrix entry");
          if (m > 60) throw InvalidInput("Coxeter matrix entry too large");
        }
      }
      if (s.name.empty()) s.name = "coxeter";
      break;
    }
    case GroupKind::Grpn:
      if (s.r < 1 || s.p < 1 || s.n < 1 || s.r % s.p != 0) throw InvalidInput("need r >= 1, n >= 1 and p | r");
      if (s.r > 60) throw InvalidInput("r too large");
      s.name = "G(" + std::to_string(s.r) + "," + std::to_string(s.p) + "," + std::to_string(s.n) + ")";
      break;
    case GroupKind::Cyclic:
      if (s.n < 1 || s.n > 60) throw InvalidInput("cyclic order must be in 1..60");
      s.name = "Z/" + std::to_string(s.n);
      break;
  }
}

}  // namespace

std::vector<std::vector<int>> coxeter_matrix_of(char type, int n) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto edge = [&](int a, int b, int v) { m[a][b] = m[b][a] = v; };
  switch (type) {
    case 'a':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, 3);
      break;
    case 'b':
      if (n < 2) throw InvalidInput("B_n needs n >= 2");
      edge(0, 1, 4);
      for (int i = 1; i + 1 < n; ++i) edge(i, i + 1, 3);
      break;
    case 'd':
      if (n < 4) throw InvalidInput("D_n needs n >= 4");
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, 3);
      edge(n - 3, n - 1, 3);
      break;
    case 'e':
      if (n < 6 || n > 8) throw InvalidInput("E_n needs 6 <= n <= 8");
      edge(0, 2, 3);
      edge(1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, 3);
      break;
    case 'f':
      if (n != 4) throw InvalidInput("only F_4 exists");
      edge(0, 1, 3);
      edge(1, 2, 4);
      edge(2, 3, 3);
      break;
    case 'h':
      if (n != 3 && n != 4) throw InvalidInput("H_n needs n in {3,4}");
      edge(0, 1, 5);
      for (int i = 1; i + 1 < n; ++i) edge(i, i + 1, 3);
      break;
    default:
      throw InvalidInput(std::string("unknown Coxeter type '") + type + "'");
  }
  return m;
}

GroupSpec parse_group_spec(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  GroupSpec s;
  if (text.empty()) throw InvalidInput("empty group spec");
  if (text[0] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      s = spec_from_json(j, raw);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("bad group spec JSON: ") + e.what());
    }
    validate_spec(s);
    return s;
  }
  std::string lower = text;
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto colon = lower.find(':');
  std::string head = lower.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : lower.substr(colon + 1);
  auto split = [&](const std::string& a) {
    std::vector<int> v;
    std::size_t pos = 0;
    while (pos <= a.size()) {
      auto comma = a.find(',', pos);
      v.push_back(parse_int(a.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos), raw));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return v;
  };
  if (head == "grpn") {
    auto v = split(args);
    if (v.size() != 3) throw InvalidInput("grpn needs r,p,n");
    s.kind = GroupKind::Grpn;
    s.r = v[0];
    s.p = v[1];
    s.n = v[2];
  } else if (head == "cyclic") {
    auto v = split(args);
    if (v.size() != 1) throw InvalidInput("cyclic needs n");
    s.kind = GroupKind::Cyclic;
    s.n = v[0];
  } else if (head == "coxeter") {
    try {
      s.coxeter = nlohmann::json::parse(text.substr(colon + 1)).get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("bad Coxeter matrix: ") + e.what());
    }
    s.kind = GroupKind::Coxeter;
    s.name = "coxeter";
  } else if (head == "i2") {
    auto v = split(args);
    if (v.size() != 1 || v[0] < 2) throw InvalidInput("i2 needs m >= 2");
    s.kind = GroupKind::Coxeter;
    s.coxeter = {{1, v[0]}, {v[0], 1}};
    s.name = "I2(" + std::to_string(v[0]) + ")";
  } else if (head == "g2") {
    s.kind = GroupKind::Coxeter;
    s.coxeter = {{1, 6}, {6, 1}};
    s.name = "G2";
  } else if (head.size() >= 2 && std::string("abdefh").find(head[0]) != std::string::npos && colon == std::string::npos) {
    int n = parse_int(head.substr(1), raw);
    if (n < 1 || n > 8) throw InvalidInput("rank out of range in '" + raw + "'");
    s.kind = GroupKind::Coxeter;
    s.coxeter = coxeter_matrix_of(head[0], n);
    s.name = std::string(1, static_cast<char>(std::toupper(head[0]))) + std::to_string(n);
  } else {
    throw InvalidInput("unknown group spec '" + raw + "'");
  }
  validate_spec(s);
  return s;
}

ReflectionGroup ReflectionGroup::build(const GroupSpec& spec_in, std::size_t cap) {
  GroupSpec spec = spec_in;
  validate_spec(spec);
  ReflectionGroup g;
  switch (spec.kind) {
    case GroupKind::Coxeter:
      g = coxeter(spec.coxeter, cap);
      break;
    case GroupKind::Grpn:
      g = grpn(spec.r, spec.p, spec.n, cap);
      break;
    case GroupKind::Cyclic:
      g = cyclic(spec.n, cap);
      break;
  }
  g.spec_ = spec;
  return g;
}

ReflectionGroup ReflectionGroup::coxeter(const std::vector<std::vector<int>>& m, std::size_t cap) {
  GroupSpec spec;
  spec.kind = GroupKind::Coxeter;
  spec.coxeter = m;
  validate_spec(spec);
  std::size_t n = m.size();
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < n; ++i) {
    Mat s = identity_matrix(n);
    s[i][i] = CycloNum(-1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && m[i][j] != 2) s[i][j] = CycloNum::two_cos(2 * m[i][j]).reduced();
    gens.push_back(std::move(s));
  }
  ReflectionGroup g = from_generators(std::move(gens), 0, cap);
  g.spec_ = spec;
  return g;
}

ReflectionGroup ReflectionGroup::grpn(int r, int p, int n, std::size_t cap) {
  GroupSpec spec;
  spec.kind = GroupKind::Grpn;
  spec.r = r;
  spec.p = p;
  spec.n = n;
  validate_spec(spec);
  auto size = static_cast<std::size_t>(n);
  std::vector<Mat> gens;
  CycloNum z = CycloNum::zeta(r).reduced();
  if (p < r || n == 1) {
    Mat t = identity_matrix(size);
    t[0][0] = z.pow(p);
    if (!t[0][0].is_one()) gens.push_back(std::move(t));
  }
  if (p > 1 && n >= 2) {
    Mat s = identity_matrix(size);
    s[0][0] = s[1][1] = CycloNum(0);
    s[0][1] = z.inv();
    s[1][0] = z;
    gens.push_back(std::move(s));
  }
  for (std::size_t i = 0; i + 1 < size; ++i) {
    Mat s = identity_matrix(size);
    s[i][i] = s[i + 1][i + 1] = CycloNum(0);
    s[i][i + 1] = s[i + 1][i] = CycloNum(1);
    gens.push_back(std::move(s));
  }
  ReflectionGroup g = from_generators(std::move(gens), 0, cap);
  g.rank_ = size;
  g.spec_ = spec;
  return g;
}

ReflectionGroup ReflectionGroup::cyclic(int n, std::size_t cap) {
  GroupSpec spec;
  spec.kind = GroupKind::Cyclic;
  spec.n = n;
  validate_spec(spec);
  std::vector<Mat> gens;
  if (n > 1) gens.push_back(Mat{{CycloNum::zeta(n).reduced()}});
  ReflectionGroup g = from_generators(std::move(gens), 0, cap);
  g.rank_ = 1;
  g.spec_ = spec;
  return g;
}

ReflectionGroup ReflectionGroup::from_generators(std::vector<Mat> gens, int field_order, std::size_t cap) {
  ReflectionGroup g;
  g.rank_ = gens.empty() ? 1 : gens[0].size();
  g.field_order_ = field_order > 0 ? field_order : entries_order(gens);
  g.gens_ = std::move(gens);
  g.spec_.name = "custom";
  g.enumerate(cap);
  g.find_reflections();
  g.find_orbits();
  return g;
}

void ReflectionGroup::enumerate(std::size_t cap) {
  std::size_t n = rank_;
  for (const auto& m : gens_)
    if (m.size() != n || std::any_of(m.begin(), m.end(), [n](const Vec& r) { return r.size() != n; }))
      throw InvalidInput("generators must be square matrices of equal size");
  points_.clear();
  VecIndex index;
  index.field = field_order_;
  index.store = &points_;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, CycloNum(0));
    e[i] = CycloNum(1);
    index.insert(e);
  }
  const std::size_t point_cap = 50000;
  std::vector<std::vector<int>> gperm(gens_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      Vec img = mat_vec(gens_[s], points_[i]);
      int j = index.find(img);
      if (j < 0) {
        if (points_.size() >= point_cap) throw InvalidInput("group too large or infinite");
        j = index.insert(img);
      }
      gperm[s].push_back(j);
    }
  }
  npoints_ = points_.size();

  perms_.clear();
  index_.clear();
  length_.clear();
  parent_.clear();
  letter_.clear();
  lmul_.assign(gens_.size(), {});
  std::vector<int> id(npoints_);
  std::iota(id.begin(), id.end(), 0);
  perms_ = id;
  index_.emplace(perm_key(id.data(), n), 0);
  length_.push_back(0);
  parent_.push_back(-1);
  letter_.push_back(-1);
  std::vector<int> next(npoints_);
  for (std::size_t w = 0; w < size(); ++w) {
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      const int* pw = &perms_[w * npoints_];
      for (std::size_t i = 0; i < npoints_; ++i) next[i] = gperm[s][pw[i]];
      auto key = perm_key(next.data(), n);
      auto it = index_.find(key);
      int idx;
      if (it == index_.end()) {
        if (size() >= cap) throw InvalidInput("group too large or infinite");
        idx = static_cast<int>(size());
        index_.emplace(std::move(key), idx);
        perms_.insert(perms_.end(), next.begin(), next.end());
        length_.push_back(length_[w] + 1);
        parent_.push_back(static_cast<int>(w));
        letter_.push_back(static_cast<int>(s));
      } else {
        idx = it->second;
      }
      lmul_[s].push_back(idx);
    }
  }
  gen_elements_.clear();
  for (std::size_t s = 0; s < gens_.size(); ++s) gen_elements_.push_back(lmul_[s][0]);

  inverse_.assign(size(), -1);
  std::vector<int> inv(npoints_);
  for (std::size_t w = 0; w < size(); ++w) {
    const int* pw = &perms_[w * npoints_];
    for (std::size_t i = 0; i < npoints_; ++i) inv[pw[i]] = static_cast<int>(i);
    inverse_[w] = index_.at(perm_key(inv.data(), n));
  }
}

Mat ReflectionGroup::matrix(int w) const {
  Mat m(rank_, Vec(rank_));
  for (std::size_t j = 0; j < rank_; ++j) {
    const Vec& col = points_[act_point(w, static_cast<int>(j))];
    for (std::size_t i = 0; i < rank_; ++i) m[i][j] = col[i];
  }
  return m;
}

int ReflectionGroup::multiply(int a, int b) const {
  std::vector<int> key(rank_);
  for (std::size_t i = 0; i < rank_; ++i) key[i] = act_point(a, act_point(b, static_cast<int>(i)));
  return index_.at(perm_key(key.data(), rank_));
}

int ReflectionGroup::find_element(const Mat& m) const {
  if (m.size() != rank_) return -1;
  std::vector<int> key(rank_);
  for (std::size_t j = 0; j < rank_; ++j) {
    Vec col(rank_);
    for (std::size_t i = 0; i < rank_; ++i) col[i] = m[i][j];
    int found = -1;
    for (std::size_t p = 0; p < npoints_; ++p)
      if (points_[p] == col) {
        found = static_cast<int>(p);
        break;
      }
    if (found < 0) return -1;
    key[j] = found;
  }
  auto it = index_.find(perm_key(key.data(), rank_));
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::size_t> ReflectionGroup::reduced_word(int w) const {
  std::vector<std::size_t> word;
  while (w != 0) {
    word.push_back(static_cast<std::size_t>(letter_[w]));
    w = parent_[w];
  }
  return word;
}

void ReflectionGroup::find_reflections() {
  reflections_.clear();
  reflection_pos_.assign(size(), -1);
  refl_hyperplane_.clear();
  refl_eigen_.clear();
  hyperplanes_.clear();
  std::vector<Vec> alphas;
  VecIndex hindex;
  hindex.field = field_order_;
  hindex.store = &alphas;
  for (std::size_t w = 1; w < size(); ++w) {
    std::complex<double> tr = 0;
    for (std::size_t i = 0; i < rank_; ++i) tr += points_[act_point(static_cast<int>(w), static_cast<int>(i))][i].to_complex();
    std::complex<double> lam = tr - static_cast<double>(rank_ - 1);
    if (std::abs(std::abs(lam) - 1.0) > 1e-8 || std::abs(lam - 1.0) < 1e-8) continue;
    Mat m = matrix(static_cast<int>(w));
    for (std::size_t i = 0; i < rank_; ++i) m[i][i] -= CycloNum(1);
    Mat ech = m;
    if (cherednik::rank(ech) != 1) continue;
    CycloNum eig(1 - static_cast<long>(rank_));
    for (std::size_t i = 0; i < rank_; ++i) eig += m[i][i] + CycloNum(1);
    Vec alpha, root;
    for (std::size_t i = 0; i < rank_ && alpha.empty(); ++i)
      if (std::any_of(m[i].begin(), m[i].end(), [](const CycloNum& x) { return !x.is_zero(); }))
        alpha = normalized_first_nonzero(m[i]);
    for (std::size_t j = 0; j < rank_ && root.empty(); ++j) {
      Vec col(rank_);
      for (std::size_t i = 0; i < rank_; ++i) col[i] = m[i][j];
      if (std::any_of(col.begin(), col.end(), [](const CycloNum& x) { return !x.is_zero(); }))
        root = normalized_first_nonzero(col);
    }
    int h = hindex.find(alpha);
    if (h < 0) {
      h = hindex.insert(alpha);
      Hyperplane hp;
      hp.alpha = alpha;
      hp.root = root;
      hp.stabilizer = {0};
      hyperplanes_.push_back(std::move(hp));
    }
    reflection_pos_[w] = static_cast<int>(reflections_.size());
    reflections_.push_back(static_cast<int>(w));
    refl_hyperplane_.push_back(h);
    refl_eigen_.push_back(eig);
    hyperplanes_[h].stabilizer.push_back(static_cast<int>(w));
  }
  for (auto& hp : hyperplanes_) {
    std::sort(hp.stabilizer.begin(), hp.stabilizer.end());
    hp.order = static_cast<int>(hp.stabilizer.size());
    CycloNum target = CycloNum::zeta(hp.order);
    for (int w : hp.stabilizer)
      if (w != 0 && reflection_eigenvalue(w) == target) hp.rotation_generator = w;
    if (hp.rotation_generator < 0) throw InternalError("pointwise stabilizer is not cyclic");
  }
}

int ReflectionGroup::act_hyperplane(int w, int h) const {
  return hyperplane_of(conjugate(w, hyperplanes_[h].rotation_generator));
}

void ReflectionGroup::find_orbits() {
  std::size_t nh = hyperplanes_.size();
  std::vector<int> parent(nh);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < gens_.size(); ++s)
    for (std::size_t h = 0; h < nh; ++h) {
      int a = find(static_cast<int>(h)), b = find(act_hyperplane(gen_elements_[s], static_cast<int>(h)));
      if (a != b) parent[a] = b;
    }
  std::vector<int> root_order;
  for (std::size_t s = 0; s < gens_.size(); ++s)
    if (is_reflection(gen_elements_[s])) root_order.push_back(find(hyperplane_of(gen_elements_[s])));
  for (std::size_t h = 0; h < nh; ++h) root_order.push_back(find(static_cast<int>(h)));
  orbits_.clear();
  std::vector<int> orbit_of_root(nh, -1);
  for (int r : root_order) {
    if (orbit_of_root[r] >= 0) continue;
    orbit_of_root[r] = static_cast<int>(orbits_.size());
    HyperplaneOrbit o;
    o.label = orbit_label(orbits_.size());
    orbits_.push_back(o);
  }
  for (std::size_t h = 0; h < nh; ++h) {
    int o = orbit_of_root[find(static_cast<int>(h))];
    hyperplanes_[h].orbit = o;
    orbits_[o].hyperplanes.push_back(static_cast<int>(h));
    orbits_[o].n_H = hyperplanes_[h].order;
  }
  coords_.clear();
  for (std::size_t o = 0; o < orbits_.size(); ++o)
    for (int j = 1; j < orbits_[o].n_H; ++j)
      coords_.push_back({orbits_[o].label + std::to_string(j), static_cast<int>(o), j});
}

int ReflectionGroup::coord_index(const std::string& name) const {
  std::string n;
  for (char c : name)
    if (c != '.') n.push_back(c);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i].name == n) return static_cast<int>(i);
  return -1;
}

bool ReflectionGroup::has_coxeter_generators() const {
  switch (spec_.kind) {
    case GroupKind::Coxeter:
      return true;
    case GroupKind::Grpn:
      return spec_.r <= 2;
    case GroupKind::Cyclic:
      return spec_.n <= 2;
  }
  return false;
}

int ReflectionGroup::element_order(int w) const {
  int k = 1;
  for (int x = w; x != 0; x = multiply(x, w)) ++k;
  return k;
}

std::vector<std::vector<int>> ReflectionGroup::coxeter_matrix() const {
  if (spec_.kind == GroupKind::Coxeter) return spec_.coxeter;
  std::size_t r = gens_.size();
  std::vector<std::vector<int>> m(r, std::vector<int>(r, 1));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j) m[i][j] = element_order(multiply(gen_elements_[i], gen_elements_[j]));
  return m;
}

int ReflectionGroup::generator_orbit(std::size_t i) const {
  int w = gen_elements_[i];
  if (!is_reflection(w)) return -1;
  return hyperplanes_[hyperplane_of(w)].orbit;
}

}  // namespace cherednik
