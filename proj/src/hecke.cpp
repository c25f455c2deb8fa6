#include "cherednik/hecke.hpp"

#include <algorithm>
#include <numeric>

namespace cherednik {

std::string to_string(SchurSource s) {
  switch (s) {
    case SchurSource::Poincare:
      return "poincare";
    case SchurSource::Gr1n:
      return "gr1n";
    case SchurSource::Trace:
      return "trace";
    case SchurSource::Table:
      return "table";
  }
  return "?";
}

SchurElement schur_from_poly(const LaurentPoly& p, SchurSource source, int bound) {
  SchurElement s;
  s.vars = p.vars();
  s.poly = p;
  s.factorization = factor_unity_roots(p, bound);
  s.source = source;
  return s;
}

SchurElement schur_from_factors(const std::vector<std::string>& vars, const std::vector<CycloFactor>& factors,
                                SchurSource source) {
  SchurElement s;
  s.vars = vars;
  s.source = source;
  s.factorization.vars = vars;
  s.factorization.unit_monomial = Exponent(vars.size(), 0);
  s.factorization.factors = canonical_factors(factors);
  s.factorization.remainder = LaurentPoly::constant(vars, CycloNum(1));
  s.poly = s.factorization.product();
  return s;
}

std::vector<std::string> param_vars(const ReflectionGroup& g) {
  std::vector<std::string> out;
  for (const auto& c : g.coords()) out.push_back(c.name);
  return out;
}

namespace {

// Exponent contributed by generator s to q_w.
std::vector<Exponent> generator_exponents(const ReflectionGroup& g) {
  if (!g.has_coxeter_generators()) throw InvalidInput("not a Coxeter system: " + g.spec().name);
  std::size_t nv = g.coords().size();
  std::vector<Exponent> out;
  for (std::size_t s = 0; s < g.num_generators(); ++s) {
    Exponent e(nv, 0);
    int o = g.generator_orbit(s);
    for (std::size_t c = 0; c < nv; ++c)
      if (g.coords()[c].orbit == o) e[c] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

Exponent add_exp(Exponent a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// exponents of q_w for every element, following the BFS parents
std::vector<Exponent> element_exponents(const ReflectionGroup& g, const std::vector<Exponent>& gen_exp) {
  std::vector<Exponent> out(g.size());
  out[0] = Exponent(g.coords().size(), 0);
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.length(a) < g.length(b); });
  for (int w : order)
    if (w != 0) out[w] = add_exp(out[g.parent(w)], gen_exp[g.parent_letter(w)]);
  return out;
}

int diagonal_orbit(const ReflectionGroup& g) {
  const auto& sp = g.spec();
  int r = sp.kind == GroupKind::Cyclic ? sp.n : sp.r;
  if (r < 2) return -1;
  return g.generator_orbit(0);
}

int transposition_orbit(const ReflectionGroup& g) {
  const auto& sp = g.spec();
  if (sp.kind != GroupKind::Grpn || sp.n < 2) return -1;
  return g.generator_orbit(g.num_generators() - 1);
}

int coord_of(const ReflectionGroup& g, int orbit, int j) {
  for (std::size_t c = 0; c < g.coords().size(); ++c)
    if (g.coords()[c].orbit == orbit && g.coords()[c].j == j) return static_cast<int>(c);
  throw InternalError("missing parameter coordinate");
}

int gr1n_r(const ReflectionGroup& g) { return g.spec().kind == GroupKind::Cyclic ? g.spec().n : g.spec().r; }
int gr1n_n(const ReflectionGroup& g) { return g.spec().kind == GroupKind::Cyclic ? 1 : g.spec().n; }

}  // namespace

LaurentPoly poincare_polynomial(const ReflectionGroup& g, const std::vector<int>* subset) {
  auto gen_exp = generator_exponents(g);
  std::vector<std::size_t> gens;
  if (subset) {
    for (int s : *subset) gens.push_back(static_cast<std::size_t>(s));
  } else {
    for (std::size_t s = 0; s < g.num_generators(); ++s) gens.push_back(s);
  }
  auto vars = param_vars(g);
  std::vector<Exponent> expo(g.size());
  std::vector<char> seen(g.size(), 0);
  std::vector<int> queue = {0};
  seen[0] = 1;
  expo[0] = Exponent(vars.size(), 0);
  LaurentPoly out(vars);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int w = queue[i];
    out.add_term(expo[w], CycloNum(1));
    for (std::size_t s : gens) {
      int x = g.left_generator(s, w);
      if (seen[x] || g.length(x) < g.length(w)) continue;
      seen[x] = 1;
      expo[x] = add_exp(expo[w], gen_exp[s]);
      queue.push_back(x);
    }
  }
  return out;
}

bool is_gr1n(const ReflectionGroup& g) {
  const auto& sp = g.spec();
  return sp.kind == GroupKind::Cyclic || (sp.kind == GroupKind::Grpn && sp.p == 1);
}

Gr1nShape gr1n_shape(const ReflectionGroup& g, const Stratum& s) {
  if (!is_gr1n(g)) throw InvalidInput("not G(r,1,n): " + g.spec().name);
  std::size_t n = g.rank();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<char> zero(n, 0);
  for (int h : s.hyperplanes) {
    std::vector<std::size_t> nz;
    const Vec& a = g.hyperplanes()[h].alpha;
    for (std::size_t i = 0; i < n; ++i)
      if (!a[i].is_zero()) nz.push_back(i);
    if (nz.size() == 1) zero[nz[0]] = 1;
    else if (nz.size() == 2) parent[find(nz[0])] = find(nz[1]);
    else throw InternalError("unexpected hyperplane in G(r,1,n)");
  }
  Gr1nShape out;
  std::vector<int> sizes(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (zero[i]) ++out.zeros;
    else ++sizes[find(i)];
  }
  for (int k : sizes)
    if (k > 0) out.blocks.push_back(k);
  std::sort(out.blocks.rbegin(), out.blocks.rend());
  return out;
}

namespace {

std::vector<std::string> native_vars(int r) {
  std::vector<std::string> v = {"q"};
  for (int j = 0; j < r; ++j) v.push_back("Q" + std::to_string(j));
  return v;
}

LaurentPoly q_factorial(int k, const std::vector<std::string>& vars) {
  LaurentPoly q = LaurentPoly::variable(vars, 0);
  LaurentPoly out = LaurentPoly::constant(vars, CycloNum(1));
  LaurentPoly qi = LaurentPoly::constant(vars, CycloNum(1));
  LaurentPoly bracket = LaurentPoly::constant(vars, CycloNum(0));
  for (int i = 1; i <= k; ++i) {
    bracket += qi;
    qi *= q;
    out *= bracket;
  }
  return out;
}

// prod_{j=1}^{r-1} prod_{m=lo}^{n-1} (q^m Q0 Q_j^{-1} - 1)
LaurentPoly gr1n_tail(int r, int n, int lo, const std::vector<std::string>& vars) {
  LaurentPoly out = LaurentPoly::constant(vars, CycloNum(1));
  for (int j = 1; j < r; ++j)
    for (int m = lo; m < n; ++m) {
      Exponent e(vars.size(), 0);
      e[0] = m;
      e[1] = 1;
      e[1 + j] = -1;
      out *= LaurentPoly::monomial(vars, e) - LaurentPoly::constant(vars, CycloNum(1));
    }
  return out;
}

}  // namespace

LaurentPoly gr1n_schur_native(int r, int n) {
  auto vars = native_vars(r);
  return q_factorial(n, vars) * gr1n_tail(r, n, 0, vars);
}

LaurentPoly gr1n_qindex_native(int r, int n, const Gr1nShape& shape) {
  auto vars = native_vars(r);
  LaurentPoly den = q_factorial(shape.zeros, vars);
  for (int k : shape.blocks) den *= q_factorial(k, vars);
  auto num = q_factorial(n, vars);
  auto ratio = num.divide_exact(den);
  if (!ratio) throw InternalError("q-multinomial not exact");
  return *ratio * gr1n_tail(r, n, shape.zeros, vars);
}

LaurentPoly gr1n_to_group_vars(const LaurentPoly& p, const ReflectionGroup& g) {
  int r = gr1n_r(g);
  auto vars = param_vars(g);
  std::map<std::string, LaurentPoly> images;
  int t = transposition_orbit(g);
  if (t >= 0) {
    Exponent e(vars.size(), 0);
    e[coord_of(g, t, 1)] = -1;
    images["q"] = LaurentPoly::monomial(vars, e);
  } else {
    images["q"] = LaurentPoly::constant(vars, CycloNum(1));
  }
  images["Q0"] = LaurentPoly::constant(vars, CycloNum(1));
  int d = diagonal_orbit(g);
  for (int j = 1; j < r; ++j) {
    Exponent e(vars.size(), 0);
    e[coord_of(g, d, j)] = 1;
    images["Q" + std::to_string(j)] = LaurentPoly::monomial(vars, e, CycloNum::zeta(r, j));
  }
  return p.substitute(images, vars);
}

std::vector<CycloFactor> gr1n_qindex_factors(const ReflectionGroup& g, const Gr1nShape& shape) {
  int r = gr1n_r(g), n = gr1n_n(g);
  std::size_t nv = g.coords().size();
  std::vector<CycloFactor> out;
  int t = transposition_orbit(g);
  if (t >= 0) {
    Exponent e(nv, 0);
    e[coord_of(g, t, 1)] = 1;
    for (int k = 2; k <= n; ++k) {
      int mult = n / k - shape.zeros / k;
      for (int b : shape.blocks) mult -= b / k;
      if (mult <= 0) continue;
      for (int a = 1; a < k; ++a)
        if (std::gcd(a, k) == 1) out.push_back({e, CycloNum::zeta(k, a), mult});
    }
  }
  if (r >= 2) {
    int d = diagonal_orbit(g);
    for (int j = 1; j < r; ++j)
      for (int m = shape.zeros; m < n; ++m) {
        Exponent e(nv, 0);
        e[coord_of(g, d, j)] = 1;
        if (m > 0) e[coord_of(g, t, 1)] = m;
        out.push_back(orient_factor({e, CycloNum::zeta(r, -j), 1}));
      }
  }
  return canonical_factors(out);
}

SchurElement q_index(const ReflectionGroup& g, const StrataData& strata, int stratum, int bound) {
  const Stratum& s = strata.strata.at(stratum);
  if (g.has_coxeter_generators() && !s.type.empty()) {
    auto pw = poincare_polynomial(g);
    auto pj = poincare_polynomial(g, &s.standard_subset);
    auto ratio = pw.divide_exact(pj);
    if (!ratio) throw InternalError("Poincare polynomial of a parabolic does not divide");
    return schur_from_poly(*ratio, SchurSource::Poincare, bound);
  }
  if (is_gr1n(g)) {
    auto shape = gr1n_shape(g, s);
    return schur_from_factors(param_vars(g), gr1n_qindex_factors(g, shape), SchurSource::Gr1n);
  }
  throw Undecidable("no Schur element source for " + g.spec().name + "; supply a Schur table");
}

HeckeAlgebra::HeckeAlgebra(const ReflectionGroup& g) : g_(g), vars_(param_vars(g)) {
  auto gen_exp = generator_exponents(g);
  qexp_ = element_exponents(g, gen_exp);
  for (const auto& e : gen_exp) qs_.push_back(LaurentPoly::monomial(vars_, e));
}

HeckeAlgebra::Element HeckeAlgebra::zero() const { return Element(g_.size(), LaurentPoly(vars_)); }

HeckeAlgebra::Element HeckeAlgebra::basis(int w) const {
  Element e = zero();
  e[w] = LaurentPoly::constant(vars_, CycloNum(1));
  return e;
}

LaurentPoly HeckeAlgebra::q_of(int w) const { return LaurentPoly::monomial(vars_, qexp_[w]); }

HeckeAlgebra::Element HeckeAlgebra::mul_generator_left(std::size_t s, const Element& a) const {
  Element out = zero();
  LaurentPoly one = LaurentPoly::constant(vars_, CycloNum(1));
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w].is_zero()) continue;
    int sw = g_.left_generator(s, static_cast<int>(w));
    if (g_.length(sw) > g_.length(static_cast<int>(w))) {
      out[sw] += a[w];
    } else {
      // T_s T_w = T_s^2 T_{sw} = (1 - q_s) T_w + q_s T_{sw}
      out[w] += a[w] * (one - qs_[s]);
      out[sw] += a[w] * qs_[s];
    }
  }
  return out;
}

HeckeAlgebra::Element HeckeAlgebra::multiply(const Element& a, const Element& b) const {
  Element out = zero();
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w].is_zero()) continue;
    auto word = g_.reduced_word(static_cast<int>(w));
    Element t = b;
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = mul_generator_left(*it, t);
    for (std::size_t x = 0; x < t.size(); ++x)
      if (!t[x].is_zero()) out[x] += a[w] * t[x];
  }
  return out;
}

HeckeAlgebra::Element HeckeAlgebra::epsilon() const {
  Element e = zero();
  for (std::size_t w = 0; w < e.size(); ++w) {
    Exponent inv = qexp_[w];
    for (int& v : inv) v = -v;
    e[w] = LaurentPoly::monomial(vars_, inv);
  }
  return e;
}

LaurentPoly HeckeAlgebra::trivial_character(const Element& a) const {
  LaurentPoly out(vars_);
  for (const auto& c : a) out += c;
  return out;
}

SchurElement schur_from_trace(const ReflectionGroup& g, int bound) {
  if (g.size() > 64) throw Undecidable("group too large for the trace-form computation");
  HeckeAlgebra h(g);
  auto vars = h.vars();
  std::size_t n = g.size();
  LaurentPoly zero(vars), one = LaurentPoly::constant(vars, CycloNum(1));
  Matrix<LaurentPoly> gram(n, std::vector<LaurentPoly>(n, zero));
  for (std::size_t u = 0; u < n; ++u) {
    auto tu = h.basis(static_cast<int>(u));
    for (std::size_t v = 0; v < n; ++v) gram[u][v] = h.trace(h.multiply(tu, h.basis(static_cast<int>(v))));
  }
  // chi(T_w) = 1 for all w: solve gram a = (1,...,1), then s = chi(a) = sum a_w
  std::vector<LaurentPoly> rhs(n, one);
  auto [det, adj] = bareiss_solve(gram, rhs, zero, one);
  if (det.is_zero()) throw InternalError("trace form is degenerate");
  LaurentPoly num(vars);
  for (const auto& a : adj) num += a;
  auto s = num.divide_exact(det);
  if (!s) throw InternalError("Schur element is not a Laurent polynomial");
  return schur_from_poly(*s, SchurSource::Trace, bound);
}

}  // namespace cherednik
