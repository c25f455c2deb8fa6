#include "cherednik/dunkl.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace cherednik {

std::vector<Exponent> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponent> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent cur(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, d);
  return out;
}

std::vector<std::string> c_vars(const ReflectionGroup& g) {
  std::vector<std::string> out;
  for (const auto& c : g.coords()) out.push_back("c_" + c.name);
  return out;
}

std::vector<LaurentPoly> symbolic_coords(const ReflectionGroup& g) {
  auto vars = c_vars(g);
  std::vector<LaurentPoly> out;
  for (std::size_t i = 0; i < vars.size(); ++i) out.push_back(LaurentPoly::variable(vars, i));
  return out;
}

LaurentPoly c_function_poly(const ReflectionGroup& g, const CFunction& f) {
  auto vars = c_vars(g);
  LaurentPoly out(vars);
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    Exponent e(vars.size(), 0);
    e[i] = 1;
    out.add_term(e, f.coeffs[i]);
  }
  return out;
}

template <class S>
DunklSystem<S>::DunklSystem(const ReflectionGroup& g, const std::vector<S>& coord_values) : g_(g) {
  auto cr = g.template reflection_params<S>(coord_values);
  for (std::size_t k = 0; k < cr.size(); ++k) {
    if (scalar_is_zero(cr[k])) continue;
    int r = g.reflections()[k];
    refl_.push_back({r, static_cast<std::size_t>(g.hyperplane_of(r)), cr[k]});
  }
  std::stable_sort(refl_.begin(), refl_.end(), [](const Refl& a, const Refl& b) { return a.hyperplane < b.hyperplane; });
}

template <class S>
const XPoly<CycloNum>& DunklSystem<S>::image(int w, const Exponent& e) const {
  auto key = std::make_pair(w, e);
  auto it = image_cache_.find(key);
  if (it != image_cache_.end()) return it->second;
  std::size_t n = rank();
  XPoly<CycloNum> out(n);
  std::size_t i = 0;
  while (i < n && e[i] == 0) ++i;
  if (i == n) {
    out = XPoly<CycloNum>::constant(n, CycloNum(1));
  } else {
    auto mit = inv_matrix_.find(w);
    if (mit == inv_matrix_.end()) mit = inv_matrix_.emplace(w, g_.matrix(g_.inverse(w))).first;
    XPoly<CycloNum> lin(n);
    for (std::size_t k = 0; k < n; ++k) {
      Exponent u(n, 0);
      u[k] = 1;
      lin.add_term(u, mit->second[i][k]);
    }
    Exponent rest = e;
    --rest[i];
    out = image(w, rest) * lin;
  }
  return image_cache_.emplace(key, std::move(out)).first->second;
}

template <class S>
XPoly<S> DunklSystem<S>::act(int w, const XPoly<S>& f) const {
  if (w == 0) return f;
  XPoly<S> out(f.nvars());
  for (const auto& [e, c] : f.terms())
    for (const auto& [u, v] : image(w, e).terms()) out.add_term(u, c * S(v));
  return out;
}

template <class S>
XPoly<S> DunklSystem<S>::reflection_sum(const XPoly<S>& f) const {
  XPoly<S> out(f.nvars());
  for (const auto& r : refl_) out += (f - act(r.element, f)).scaled(r.c);
  return out;
}

template <class S>
XPoly<S> DunklSystem<S>::apply(const Vec& y, const XPoly<S>& f) const {
  XPoly<S> out = f.derivative(y);
  std::size_t k = 0;
  while (k < refl_.size()) {
    std::size_t h = refl_[k].hyperplane;
    const Vec& alpha = g_.hyperplanes()[h].alpha;
    CycloNum ay = dot(alpha, y);
    if (ay.is_zero()) {
      while (k < refl_.size() && refl_[k].hyperplane == h) ++k;
      continue;
    }
    XPoly<S> acc(f.nvars());
    for (; k < refl_.size() && refl_[k].hyperplane == h; ++k) acc += (f - act(refl_[k].element, f)).scaled(refl_[k].c);
    auto q = acc.divide_linear(alpha);
    if (!q) throw InternalError("Dunkl operator: f - r.f not divisible by alpha_r");
    out -= q->scaled(ay);
  }
  return out;
}

template <class S>
XPoly<S> DunklSystem<S>::apply_basis(std::size_t i, const XPoly<S>& f) const {
  Vec y(rank(), CycloNum(0));
  y[i] = CycloNum(1);
  return apply(y, f);
}

template <class S>
const Matrix<S>& DunklSystem<S>::operator_matrix(std::size_t i, int d) const {
  auto key = std::make_pair(i, d);
  if (auto it = op_cache_.find(key); it != op_cache_.end()) return it->second;
  std::size_t n = rank();
  auto src = monomials_of_degree(n, d);
  auto dst = monomials_of_degree(n, d - 1);
  Matrix<S> m(dst.size(), std::vector<S>(src.size()));
  for (std::size_t col = 0; col < src.size(); ++col) {
    auto img = apply_basis(i, XPoly<S>::monomial(n, src[col], S(CycloNum(1))));
    for (std::size_t row = 0; row < dst.size(); ++row) m[row][col] = img.coefficient(dst[row]);
  }
  return op_cache_.emplace(key, std::move(m)).first->second;
}

// Row of the functional f -> constant term of y^a f on degree |a| monomials.
template <class S>
const std::vector<S>& DunklSystem<S>::pairing_row(const Exponent& a) const {
  if (auto it = row_cache_.find(a); it != row_cache_.end()) return it->second;
  int d = 0;
  for (int e : a) d += e;
  std::vector<S> row;
  if (d == 0) {
    row.assign(1, S(CycloNum(1)));
  } else {
    std::size_t i = 0;
    while (a[i] == 0) ++i;
    Exponent prev = a;
    --prev[i];
    const auto& left = pairing_row(prev);
    const auto& y = operator_matrix(i, d);
    row.assign(y.empty() ? 0 : y[0].size(), S(CycloNum(0)));
    for (std::size_t k = 0; k < left.size(); ++k) {
      if (left[k] == S(CycloNum(0))) continue;
      for (std::size_t col = 0; col < row.size(); ++col)
        if (!(y[k][col] == S(CycloNum(0)))) row[col] += left[k] * y[k][col];
    }
  }
  return row_cache_.emplace(a, std::move(row)).first->second;
}

template <class S>
Matrix<S> DunklSystem<S>::pairing_matrix(int d) const {
  Matrix<S> out;
  for (const auto& a : monomials_of_degree(rank(), d)) out.push_back(pairing_row(a));
  return out;
}

template class DunklSystem<CycloNum>;
template class DunklSystem<LaurentPoly>;

template <class S>
bool euler_check(const DunklSystem<S>& dunkl, const XPoly<S>& f, int d) {
  if (!f.is_zero() && !f.is_homogeneous(d)) throw InvalidInput("euler_check needs a homogeneous polynomial");
  XPoly<S> lhs(f.nvars());
  for (std::size_t i = 0; i < dunkl.rank(); ++i) lhs += dunkl.apply_basis(i, f).times_var(i);
  XPoly<S> rhs = f.scaled(CycloNum(static_cast<long>(d))) - dunkl.reflection_sum(f);
  return lhs == rhs;
}

template bool euler_check(const DunklSystem<CycloNum>&, const XPoly<CycloNum>&, int);
template bool euler_check(const DunklSystem<LaurentPoly>&, const XPoly<LaurentPoly>&, int);

std::string LinearCondition::str() const {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    std::string c = a[i].str();
    bool neg = a[i].is_rational() && a[i].to_rational() < 0;
    if (neg) c = (-a[i]).str();
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (c != "1") out += (a[i].is_rational() ? c : "(" + c + ")") + "*";
    out += vars[i];
  }
  return out + " = " + b.str();
}

std::optional<LinearCondition> linear_condition(const LaurentPoly& p) {
  LinearCondition lc;
  lc.vars = p.vars();
  lc.a.assign(lc.vars.size(), CycloNum(0));
  bool any = false;
  for (const auto& [e, c] : p.terms()) {
    int total = 0;
    for (int v : e) {
      if (v < 0) return std::nullopt;
      total += v;
    }
    if (total > 1) return std::nullopt;
    if (total == 0) {
      lc.b = -c;
      continue;
    }
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] == 1) lc.a[i] = c;
    any = true;
  }
  if (!any) return std::nullopt;
  std::vector<CycloNum*> all;
  for (auto& v : lc.a) all.push_back(&v);
  all.push_back(&lc.b);
  bool rational = std::all_of(all.begin(), all.end(), [](CycloNum* v) { return v->is_rational(); });
  CycloNum lead;
  for (const auto& v : lc.a)
    if (!v.is_zero()) {
      lead = v;
      break;
    }
  CycloNum scale = lead.inv();
  if (rational) {
    mpz_class den = 1, num = 0;
    for (auto* v : all) {
      Rational r = v->to_rational();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
    }
    for (auto* v : all) {
      Rational r = v->to_rational() * den;
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), r.get_num().get_mpz_t());
    }
    Rational s(den, num);
    if (lead.to_rational() < 0) s = -s;
    scale = CycloNum(s);
  }
  for (auto* v : all) *v = (*v * scale).reduced();
  return lc;
}

namespace {

LaurentPoly lambda_power(const Vec& lambda, const Exponent& e, const std::vector<std::string>& vars) {
  CycloNum v(1);
  for (std::size_t i = 0; i < e.size(); ++i) v *= lambda[i].pow(e[i]);
  return LaurentPoly::constant(vars, v);
}

bool divides_all(const std::vector<LaurentPoly>& nums, const LaurentPoly& f) {
  return std::all_of(nums.begin(), nums.end(), [&](const LaurentPoly& x) { return x.is_zero() || x.divide_exact(f); });
}

void divide_all(std::vector<LaurentPoly>& nums, const LaurentPoly& f) {
  for (auto& x : nums)
    if (!x.is_zero()) x = *x.divide_exact(f);
}

}  // namespace

ExpSeries exp_series_symbolic(const ReflectionGroup& g, const Vec& lambda, int D, const CharacterData* chars) {
  if (lambda.size() != g.rank()) throw InvalidInput("lambda has the wrong length");
  ExpSeries s;
  s.lambda = lambda;
  s.max_degree = D;
  s.cvars = c_vars(g);
  const auto& vars = s.cvars;
  DunklSystem<LaurentPoly> dk(g, symbolic_coords(g));
  std::vector<LaurentPoly> cfs;
  if (chars)
    for (std::size_t f = 0; f < chars->size(); ++f) {
      auto p = c_function_poly(g, c_function(g, *chars, f));
      if (!p.is_zero() && std::find(cfs.begin(), cfs.end(), p) == cfs.end()) cfs.push_back(p);
    }
  LaurentPoly zero(vars), one = LaurentPoly::constant(vars, CycloNum(1));
  std::size_t n = g.rank();
  for (int d = 0; d <= D; ++d) {
    auto monos = monomials_of_degree(n, d);
    std::vector<LaurentPoly> rhs;
    for (const auto& e : monos) rhs.push_back(lambda_power(lambda, e, vars));
    auto [det, nums] = bareiss_solve(dk.pairing_matrix(d), rhs, zero, one);
    if (det.is_zero()) throw InternalError("pairing is degenerate at degree " + std::to_string(d));
    LaurentPoly rest = det;
    for (int m = 1; m <= d; ++m)
      for (const auto& cf : cfs) {
        LaurentPoly l = LaurentPoly::constant(vars, CycloNum(static_cast<long>(m))) - cf;
        int mult = 0;
        while (auto q = rest.divide_exact(l)) {
          rest = *q;
          ++mult;
        }
        int cancelled = 0;
        while (cancelled < mult && divides_all(nums, l)) {
          divide_all(nums, l);
          det = *det.divide_exact(l);
          ++cancelled;
        }
        if (cancelled < mult && std::find(s.denominator_factors.begin(), s.denominator_factors.end(), l) ==
                                    s.denominator_factors.end())
          s.denominator_factors.push_back(l);
      }
    if (rest.total_degree() > 0 || !rest.is_monomial()) {
      if (divides_all(nums, rest)) {
        divide_all(nums, rest);
        det = *det.divide_exact(rest);
      } else {
        s.unfactored.push_back(rest);
      }
    }
    XPoly<LaurentPoly> num(n);
    for (std::size_t k = 0; k < monos.size(); ++k) num.add_term(monos[k], nums[k]);
    s.numerators.push_back(std::move(num));
    s.denominators.push_back(det);
  }
  return s;
}

std::vector<LinearCondition> singular_hyperplanes(const ExpSeries& s) {
  std::vector<LinearCondition> out;
  auto add = [&](const LaurentPoly& p) {
    auto lc = linear_condition(p);
    if (lc && std::find(out.begin(), out.end(), *lc) == out.end()) out.push_back(*lc);
  };
  for (const auto& f : s.denominator_factors) add(f);
  for (const auto& f : s.unfactored) add(f);
  return out;
}

NumericSeries exp_series_numeric(const ReflectionGroup& g, const std::vector<CycloNum>& coord_values,
                                 const Vec& lambda, int D) {
  if (lambda.size() != g.rank()) throw InvalidInput("lambda has the wrong length");
  NumericSeries out;
  DunklSystem<CycloNum> dk(g, coord_values);
  std::size_t n = g.rank();
  for (int d = 0; d <= D; ++d) {
    auto monos = monomials_of_degree(n, d);
    Vec rhs;
    for (const auto& e : monos) {
      CycloNum v(1);
      for (std::size_t i = 0; i < n; ++i) v *= lambda[i].pow(e[i]);
      rhs.push_back(v);
    }
    auto res = solve_linear(dk.pairing_matrix(d), rhs);
    XPoly<CycloNum> comp(n);
    if (!res.consistent) {
      out.status = NumericSeries::Status::Pole;
      out.degree = d;
      out.components.push_back(comp);
      return out;
    }
    if (res.singular) {
      if (out.status == NumericSeries::Status::Regular) {
        out.status = NumericSeries::Status::Indeterminate;
        out.degree = d;
      }
      out.components.push_back(comp);
      continue;
    }
    for (std::size_t k = 0; k < monos.size(); ++k) comp.add_term(monos[k], res.solution[k]);
    out.components.push_back(std::move(comp));
  }
  return out;
}

std::vector<XPoly<CycloNum>> dual_basis_solve(const DunklSystem<CycloNum>& dunkl, int d) {
  std::size_t n = dunkl.rank();
  auto monos = monomials_of_degree(n, d);
  auto p = dunkl.pairing_matrix(d);
  std::vector<XPoly<CycloNum>> out;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    Vec rhs(monos.size(), CycloNum(0));
    rhs[i] = CycloNum(1);
    auto res = solve_linear(p, rhs);
    if (res.singular) throw Undecidable("pairing is singular at degree " + std::to_string(d));
    XPoly<CycloNum> f(n);
    for (std::size_t k = 0; k < monos.size(); ++k) f.add_term(monos[k], res.solution[k]);
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

XPoly<CycloNum> apply_projector(const DunklSystem<CycloNum>& dk, const std::vector<CycloNum>& proj,
                                const XPoly<CycloNum>& f) {
  XPoly<CycloNum> out(f.nvars());
  for (std::size_t w = 0; w < proj.size(); ++w)
    if (!proj[w].is_zero()) out += dk.act(static_cast<int>(w), f).scaled(proj[w]);
  return out;
}

}  // namespace

std::vector<XPoly<CycloNum>> dual_basis_recursion(const DunklSystem<CycloNum>& dunkl, const CharacterData& chars,
                                                  const std::vector<CycloNum>& coord_values, int d) {
  std::size_t n = dunkl.rank();
  const auto& g = dunkl.group();
  std::vector<std::vector<CycloNum>> proj;
  std::vector<CycloNum> cf;
  for (std::size_t f = 0; f < chars.size(); ++f) {
    proj.push_back(chars.projector(f));
    cf.push_back(c_function(g, chars, f).eval(coord_values));
  }
  std::map<Exponent, XPoly<CycloNum>> prev;
  prev.emplace(Exponent(n, 0), XPoly<CycloNum>::constant(n, CycloNum(1)));
  for (int k = 1; k <= d; ++k) {
    std::map<Exponent, XPoly<CycloNum>> cur;
    for (const auto& e : monomials_of_degree(n, k)) {
      XPoly<CycloNum> s(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        Exponent p = e;
        --p[i];
        s += prev.at(p).times_var(i);
      }
      XPoly<CycloNum> f(n);
      for (std::size_t F = 0; F < proj.size(); ++F) {
        CycloNum denom = CycloNum(static_cast<long>(k)) - cf[F];
        XPoly<CycloNum> part = apply_projector(dunkl, proj[F], s);
        if (part.is_zero()) continue;
        if (denom.is_zero()) throw Undecidable("recursion hits d = c_F at degree " + std::to_string(k));
        f += part.scaled(denom.inv());
      }
      cur.emplace(e, std::move(f));
    }
    prev = std::move(cur);
  }
  std::vector<XPoly<CycloNum>> out;
  for (const auto& e : monomials_of_degree(n, d)) out.push_back(prev.at(e));
  return out;
}

namespace {

using Form = std::vector<XPoly<CycloNum>>;  // indexed by the bitmask of dx_i

int popcount(unsigned m) { return __builtin_popcount(m); }

Form koszul(const Form& f, std::size_t n) {
  Form out(f.size(), XPoly<CycloNum>(n));
  for (unsigned mask = 0; mask < f.size(); ++mask) {
    if (f[mask].is_zero()) continue;
    int pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      auto t = f[mask].times_var(i);
      out[mask ^ (1u << i)] += (pos % 2 == 0) ? t : t.scaled(CycloNum(-1));
      ++pos;
    }
  }
  return out;
}

Form dunkl_differential(const DunklSystem<CycloNum>& dk, const Form& f, std::size_t n) {
  Form out(f.size(), XPoly<CycloNum>(n));
  for (unsigned mask = 0; mask < f.size(); ++mask) {
    if (f[mask].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) continue;
      auto t = dk.apply_basis(i, f[mask]);
      bool odd = popcount(mask & ((1u << i) - 1)) % 2;
      out[mask | (1u << i)] += odd ? t.scaled(CycloNum(-1)) : t;
    }
  }
  return out;
}

Form act_form(const DunklSystem<CycloNum>& dk, int w, const Form& f, std::size_t n) {
  Mat m = dk.group().matrix(dk.group().inverse(w));
  Form out(f.size(), XPoly<CycloNum>(n));
  for (unsigned s = 0; s < f.size(); ++s) {
    if (f[s].is_zero()) continue;
    auto wf = dk.act(w, f[s]);
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (s & (1u << i)) rows.push_back(i);
    for (unsigned t = 0; t < f.size(); ++t) {
      if (popcount(t) != popcount(s)) continue;
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < n; ++i)
        if (t & (1u << i)) cols.push_back(i);
      Mat minor(rows.size(), Vec(cols.size()));
      for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) minor[a][b] = m[rows[a]][cols[b]];
      CycloNum det = bareiss_det(minor, CycloNum(0), CycloNum(1));
      if (!det.is_zero()) out[t] += wf.scaled(det);
    }
  }
  return out;
}

}  // namespace

bool derham_check(const DunklSystem<CycloNum>& dunkl, const CharacterData& chars,
                  const std::vector<CycloNum>& coord_values, int d, int p) {
  const auto& g = dunkl.group();
  std::size_t n = dunkl.rank();
  std::size_t nmask = std::size_t{1} << n;
  for (std::size_t F = 0; F < chars.size(); ++F) {
    auto proj = chars.projector(F);
    CycloNum scalar = CycloNum(static_cast<long>(d + p)) - c_function(g, chars, F).eval(coord_values);
    for (const auto& e : monomials_of_degree(n, d))
      for (unsigned mask = 0; mask < nmask; ++mask) {
        if (popcount(mask) != p) continue;
        Form b(nmask, XPoly<CycloNum>(n));
        b[mask] = XPoly<CycloNum>::monomial(n, e, CycloNum(1));
        Form v(nmask, XPoly<CycloNum>(n));
        for (std::size_t w = 0; w < proj.size(); ++w) {
          if (proj[w].is_zero()) continue;
          auto wb = act_form(dunkl, static_cast<int>(w), b, n);
          for (unsigned t = 0; t < nmask; ++t) v[t] += wb[t].scaled(proj[w]);
        }
        auto a1 = dunkl_differential(dunkl, koszul(v, n), n);
        auto a2 = koszul(dunkl_differential(dunkl, v, n), n);
        for (unsigned t = 0; t < nmask; ++t)
          if (a1[t] + a2[t] != v[t].scaled(scalar)) return false;
      }
  }
  return true;
}

}  // namespace cherednik
