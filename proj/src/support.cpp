#include "cherednik/support.hpp"

#include <algorithm>
#include <random>

namespace cherednik {

long ParamPoint::order() const {
  mpz_class l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  if (!l.fits_slong_p() || l > 100000) throw InvalidInput("parameter denominators are too large");
  return l.get_si();
}

std::vector<CycloNum> ParamPoint::cyclo() const {
  std::vector<CycloNum> out;
  for (const auto& v : values) out.emplace_back(v);
  return out;
}

std::vector<CycloNum> ParamPoint::q_values() const {
  std::vector<CycloNum> out;
  for (const auto& v : values) {
    mpz_class den = v.get_den(), num = v.get_num() % den;
    if (num < 0) num += den;
    out.push_back(CycloNum::zeta(static_cast<int>(den.get_si()), num.get_si()));
  }
  return out;
}

namespace {

ParamPoint empty_point(const ReflectionGroup& g) {
  ParamPoint p;
  for (const auto& c : g.coords()) p.names.push_back(c.name);
  p.values.assign(p.names.size(), Rational(0));
  return p;
}

bool is_diagonal_orbit(const ReflectionGroup& g, int orbit) {
  const auto& h = g.hyperplanes()[g.orbits()[orbit].hyperplanes.front()];
  return std::count_if(h.alpha.begin(), h.alpha.end(), [](const CycloNum& v) { return !v.is_zero(); }) == 1;
}

}  // namespace

ParamPoint param_point(const ReflectionGroup& g, const std::map<std::string, Rational>& values) {
  ParamPoint p = empty_point(g);
  for (const auto& [key, v] : values) {
    std::string name = key;
    name.erase(std::remove(name.begin(), name.end(), '.'), name.end());
    auto it = std::find(p.names.begin(), p.names.end(), name);
    if (it == p.names.end()) throw InvalidInput("unknown parameter coordinate '" + key + "'");
    p.values[it - p.names.begin()] = v;
  }
  return p;
}

ParamPoint param_point_uniform(const ReflectionGroup& g, const Rational& c) {
  ParamPoint p = empty_point(g);
  p.values.assign(p.names.size(), c);
  return p;
}

ParamPoint param_point_gr1n(const ReflectionGroup& g, const Gr1nParams& gp) {
  if (!is_gr1n(g)) throw InvalidInput("gr1n parameters need a group G(r,1,n) or a cyclic group");
  int r = g.spec().kind == GroupKind::Cyclic ? g.spec().n : g.spec().r;
  if (r >= 2 && static_cast<int>(gp.d.size()) != r) throw InvalidInput("gr1n parameters need d_0..d_{r-1}");
  ParamPoint p = empty_point(g);
  for (std::size_t i = 0; i < p.names.size(); ++i) {
    const auto& pc = g.coords()[i];
    if (r >= 2 && is_diagonal_orbit(g, pc.orbit))
      p.values[i] = (gp.d[0] - gp.d[pc.j]) / Rational(r);
    else
      p.values[i] = gp.c0;
  }
  return p;
}

std::string to_string(Positivity p) {
  switch (p) {
    case Positivity::Positive: return "positive";
    case Positivity::NotPositive: return "not-positive";
    case Positivity::Indeterminate: return "indeterminate";
  }
  return "?";
}

Positivity positivity(const Exponent& a, const Rational& value) {
  bool nonneg = std::all_of(a.begin(), a.end(), [](int v) { return v >= 0; });
  bool nonpos = std::all_of(a.begin(), a.end(), [](int v) { return v <= 0; });
  if ((nonneg && value > 0) || (nonpos && value < 0)) return Positivity::Positive;
  if (nonneg || nonpos) return Positivity::NotPositive;
  return Positivity::Indeterminate;
}

SchurElement stratum_qindex(const ReflectionGroup& g, const StrataData& strata, int stratum, const SchurTable* table,
                            int bound) {
  if (stratum == strata.origin_index) return schur_from_factors(param_vars(g), {}, SchurSource::Poincare);
  try {
    return q_index(g, strata, stratum, bound);
  } catch (const Undecidable&) {
    if (table)
      if (auto el = table->lookup(g, strata.strata[stratum])) return *el;
    throw Undecidable("no Schur data for stratum " + strata.strata[stratum].id + " of " + g.spec().name +
                      "; provide table data");
  }
}

std::vector<Witness> vanishing_witnesses(const std::vector<CycloFactor>& factors, const ParamPoint& c) {
  std::vector<Witness> out;
  for (const auto& f : factors) {
    auto theta = f.root.root_of_unity_angle();
    if (!theta) continue;
    Rational v = 0;
    for (std::size_t i = 0; i < f.monomial.size(); ++i) v += Rational(f.monomial[i]) * c.values[i];
    Rational diff = v - *theta;
    if (diff.get_den() != 1) continue;
    out.push_back({{f.monomial, *theta}, v, positivity(f.monomial, v)});
  }
  return out;
}

std::vector<SchurElement> all_qindices(const ReflectionGroup& g, const StrataData& strata, const SchurTable* table,
                                       int bound) {
  std::vector<SchurElement> out;
  for (std::size_t i = 0; i < strata.strata.size(); ++i)
    out.push_back(stratum_qindex(g, strata, static_cast<int>(i), table, bound));
  return out;
}

SupportResult support_from_qindices(const StrataData& strata, const std::vector<SchurElement>& qindices,
                                    const ParamPoint& c) {
  SupportResult res;
  res.finite_dimensional = true;
  for (std::size_t i = 0; i < strata.strata.size(); ++i) {
    StratumVerdict v;
    v.stratum = static_cast<int>(i);
    v.source = qindices[i].source;
    v.witnesses = vanishing_witnesses(qindices[i].factorization.factors, c);
    bool positive = false, indeterminate = false;
    for (const auto& w : v.witnesses) {
      positive |= w.positivity == Positivity::Positive;
      indeterminate |= w.positivity == Positivity::Indeterminate;
    }
    v.in_support = !positive;
    if (!positive && indeterminate)
      res.warnings.push_back("stratum " + strata.strata[i].id +
                             ": vanishing factor with mixed-sign monomial, kept in support");
    if (v.in_support && static_cast<int>(i) != strata.origin_index) res.finite_dimensional = false;
    res.strata.push_back(std::move(v));
  }
  return res;
}

SupportResult support_via_schur(const ReflectionGroup& g, const StrataData& strata, const ParamPoint& c,
                                const SchurTable* table, int bound) {
  return support_from_qindices(strata, all_qindices(g, strata, table, bound), c);
}

bool finite_dimensional(const ReflectionGroup& g, const StrataData& strata, const ParamPoint& c,
                        const SchurTable* table, int bound) {
  return support_via_schur(g, strata, c, table, bound).finite_dimensional;
}

namespace {

bool is_integer(const Rational& v) { return v.get_den() == 1; }

// Some j in [1, r-1] with d_0 - d_j + r m c_0 a positive integer congruent to -j mod r.
bool gr1n_condition(int r, int m, const Gr1nParams& p) {
  for (int j = 1; j < r; ++j) {
    Rational k = p.d[0] - p.d[j] + Rational(r) * Rational(m) * p.c0;
    if (!is_integer(k) || k <= 0) continue;
    mpz_class kk = k.get_num();
    mpz_class rem = (kk + j) % r;
    if (rem == 0) return true;
  }
  return false;
}

}  // namespace

bool gr1n_finite_dim_criterion(int r, int n, const Gr1nParams& p) {
  if (r < 2) throw InvalidInput("the G(r,1,n) criterion needs r >= 2");
  if (n < 1) throw InvalidInput("n must be positive");
  if (static_cast<int>(p.d.size()) != r) throw InvalidInput("need d_0..d_{r-1}");
  if (gr1n_condition(r, n - 1, p)) return true;
  if (p.c0 <= 0) return false;
  mpz_class den = p.c0.get_den();
  if (!den.fits_slong_p() || n % den.get_si() != 0) return false;
  long d = den.get_si();
  for (long m = n - d; m <= n - 1; ++m)
    if (gr1n_condition(r, static_cast<int>(m), p)) return true;
  return false;
}

namespace {

std::vector<int> covector_stabilizer(const ReflectionGroup& g, const Vec& lambda) {
  std::vector<int> out;
  std::size_t n = g.rank();
  for (int w = 0; w < static_cast<int>(g.size()); ++w) {
    Mat m = g.matrix(w);
    bool fixed = true;
    for (std::size_t i = 0; i < n && fixed; ++i) {
      CycloNum v(0);
      for (std::size_t k = 0; k < n; ++k) v += lambda[k] * m[k][i];
      fixed = v == lambda[i];
    }
    if (fixed) out.push_back(w);
  }
  return out;
}

}  // namespace

Vec choose_lambda(const ReflectionGroup& g, const Stratum& s, std::uint64_t seed) {
  std::size_t n = g.rank();
  Mat h(n, Vec(n, CycloNum(0)));
  for (int w = 0; w < static_cast<int>(g.size()); ++w) {
    Mat m = g.matrix(w);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) h[i][j] += m[k][i].conj() * m[k][j];
  }
  for (auto& row : h)
    for (auto& v : row) v = v.reduced();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Vec p(n, CycloNum(0));
    for (const auto& b : s.flat_basis) {
      CycloNum t(static_cast<long>(coef(rng)));
      for (std::size_t i = 0; i < n; ++i) p[i] += t * b[i];
    }
    Vec lambda(n, CycloNum(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) lambda[i] += p[k].conj() * h[k][i];
      lambda[i] = lambda[i].reduced();
    }
    if (covector_stabilizer(g, lambda) == s.parabolic) return lambda;
  }
  throw InternalError("no covector with stabilizer W_S found for stratum " + s.id);
}

SupportResult support_via_exponential(const ReflectionGroup& g, const StrataData& strata, const ParamPoint& c, int D,
                                      std::uint64_t seed) {
  if (D < 1) throw InvalidInput("degree bound must be at least 1");
  DunklSystem<CycloNum> dk(g, c.cyclo());
  std::vector<Mat> pairing;
  std::size_t n = g.rank();
  for (int d = 0; d <= D; ++d) pairing.push_back(dk.pairing_matrix(d));
  SupportResult res;
  res.finite_dimensional = true;
  for (std::size_t si = 0; si < strata.strata.size(); ++si) {
    StratumVerdict v;
    v.stratum = static_cast<int>(si);
    v.certified = false;
    Vec lambda = choose_lambda(g, strata.strata[si], seed + si);
    for (int d = 1; d <= D; ++d) {
      auto monos = monomials_of_degree(n, d);
      Vec rhs;
      for (const auto& e : monos) {
        CycloNum t(1);
        for (std::size_t i = 0; i < n; ++i) t *= lambda[i].pow(e[i]);
        rhs.push_back(t.reduced());
      }
      if (!solve_linear(pairing[d], rhs).consistent) {
        v.in_support = false;
        v.certified = true;
        break;
      }
    }
    if (v.in_support && static_cast<int>(si) != strata.origin_index) res.finite_dimensional = false;
    res.strata.push_back(std::move(v));
  }
  return res;
}

}  // namespace cherednik
