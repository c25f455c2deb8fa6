#include <chrono>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "cherednik/hecke.hpp"
#include "cherednik/schur_table.hpp"
#include "cherednik/support.hpp"

using namespace cherednik;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimit1 = 1, kLimit2 = 1, kLimit3 = 60, kLimit4 = 5, kLimit5 = 1, kLimit6 = 30,
                 kLimit7 = 120, kLimit8 = 300, kLimit9 = 60, kLimit10 = 5;
// Vanishing threshold for the floating-point q-binomial oracle.
constexpr double kOracleTol = 1e-9;

std::string table_path() { return std::string(CHEREDNIK_DATA_DIR) + "/schur_tables.txt"; }

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void run(int n, double limit, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && secs > limit) {
    o.ok = false;
    o.detail = "over time limit";
  }
  if (!o.ok) ++failures;
  std::printf("criterion %2d: %s  (%.2fs / %.0fs)%s%s\n", n, o.ok ? "PASS" : "FAIL", secs, limit,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
}

ReflectionGroup build(const std::string& spec) { return ReflectionGroup::build(parse_group_spec(spec)); }

std::vector<CycloFactor> expected_factors(const std::string& text, const std::vector<std::string>& vars) {
  return canonical_factors(ungroup_labels(parse_groups(text, vars)));
}

int stratum_of_type(const StrataData& s, const std::string& type) {
  for (std::size_t i = 0; i < s.strata.size(); ++i)
    if (s.strata[i].type == type) return static_cast<int>(i);
  return -1;
}

std::vector<Rational> fractions(long maxden, const Rational& lo, const Rational& hi, bool open_lo) {
  std::vector<Rational> out;
  for (long d = 1; d <= maxden; ++d) {
    Rational scaled = lo * d;
    mpz_class m0 = scaled.get_num() / scaled.get_den() - 1;
    for (long m = m0.get_si();; ++m) {
      Rational v = make_rational(m, d);
      if (v > hi) break;
      if (v.get_den() != d || v < lo || (open_lo && v == lo)) continue;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Gaussian binomial coefficients as integer coefficient lists.
std::vector<long> qbinom(int n, int k) {
  std::vector<std::vector<std::vector<long>>> t(n + 1);
  for (int a = 0; a <= n; ++a) {
    t[a].resize(a + 1);
    for (int b = 0; b <= a; ++b) {
      if (b == 0 || b == a) {
        t[a][b] = {1};
        continue;
      }
      const auto& x = t[a - 1][b - 1];
      const auto& y = t[a - 1][b];
      std::vector<long> s(std::max(x.size(), y.size() + b), 0);
      for (std::size_t i = 0; i < x.size(); ++i) s[i] += x[i];
      for (std::size_t i = 0; i < y.size(); ++i) s[i + b] += y[i];
      t[a][b] = s;
    }
  }
  return t[n][k];
}

bool oracle_finite(int n, const Rational& c) {
  if (c <= 0) return false;
  std::complex<double> q = std::polar(1.0, 2 * M_PI * c.get_d());
  for (int k = 1; k < n; ++k) {
    std::complex<double> v = 0, p = 1;
    for (long coef : qbinom(n, k)) {
      v += static_cast<double>(coef) * p;
      p *= q;
    }
    if (std::abs(v) > kOracleTol) return false;
  }
  return true;
}

Outcome criterion1() {
  Outcome o;
  auto g = build("h3");
  auto vars = param_vars(g);
  auto s = schur_from_poly(poincare_polynomial(g), SchurSource::Poincare);
  auto want = expected_factors("Phi2^3 Phi3 Phi5 Phi6 Phi10 (x1)", vars);
  o.require(same_factors(s.factorization.factors, want), "factor multiset differs: " + s.text());
  o.require(s.factorization.remainder.total_degree() == 0, "nontrivial remainder");
  o.require(s.text() == "Phi2^3 Phi3 Phi5 Phi6 Phi10 (x1)", "text " + s.text());
  o.detail = o.ok ? s.text() : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto g = build("h3");
  auto strata = compute_strata(g);
  auto table = SchurTable::load(table_path());
  for (const char* type : {"H2", "A1^2", "A2"}) {
    int i = stratum_of_type(strata, type);
    o.require(i >= 0, std::string("no stratum ") + type);
    if (i < 0) continue;
    auto got = q_index(g, strata, i);
    const auto* row = table.find("G23", type);
    o.require(row != nullptr, std::string("no table row G23 ") + type);
    if (!row) continue;
    auto want = table.element(*row);
    o.require(same_factors(got.factorization.factors, want.factorization.factors),
              std::string(type) + ": " + got.text() + " vs " + want.text());
  }
  return o;
}

Outcome table_row_check(const std::string& spec, const std::string& row_group) {
  Outcome o;
  auto g = build(spec);
  auto table = SchurTable::load(table_path());
  const auto* row = table.find(row_group, "1");
  o.require(row != nullptr, "missing table row " + row_group);
  if (!row) return o;
  auto want = table.element(*row);
  auto got = schur_from_poly(poincare_polynomial(g), SchurSource::Poincare);
  auto mapped = want.poly.with_vars(got.vars);
  o.require(got.poly.equal_up_to_unit(mapped), row_group + ": polynomials differ up to unit");
  o.require(same_factors(got.factorization.factors, schur_from_poly(mapped, SchurSource::Table).factorization.factors),
            row_group + ": factor lists differ");
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (int n : {2, 3}) {
    auto g = build("grpn:2,1," + std::to_string(n));
    auto formula = gr1n_to_group_vars(gr1n_schur_native(2, n), g);
    auto poin = poincare_polynomial(g);
    o.require(formula.equal_up_to_unit(poin), "B" + std::to_string(n) + ": formula differs from enumeration");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto z2 = ReflectionGroup::cyclic(2);
  auto chars = compute_characters(z2);
  auto s = exp_series_symbolic(z2, Vec{CycloNum(1)}, 8, &chars);
  auto c = symbolic_coords(z2)[0];
  auto one = LaurentPoly::constant(c.vars(), CycloNum(1));
  // coefficient of y^d x^d is 1 / prod_{k <= d} (k odd ? k - 2c : k)
  LaurentPoly den = one;
  for (int d = 0; d <= 8; ++d) {
    if (d > 0) den = den * (d % 2 ? LaurentPoly(d) * one - LaurentPoly(2) * c : LaurentPoly(d) * one);
    auto num = s.numerators[d].coefficient(Exponent{d});
    o.require(s.numerators[d].terms().size() == 1, "degree " + std::to_string(d) + " has extra terms");
    o.require(num * den == s.denominators[d], "degree " + std::to_string(d) + " coefficient differs");
  }
  std::vector<std::string> got;
  for (const auto& h : singular_hyperplanes(s)) got.push_back(h.str());
  std::sort(got.begin(), got.end());
  std::vector<std::string> want{"2*c_x1 = 1", "2*c_x1 = 3", "2*c_x1 = 5", "2*c_x1 = 7"};
  o.require(got == want, "singular set differs");
  o.require(s.unfactored.empty(), "unfactored denominators");
  return o;
}

Outcome criterion6() {
  Outcome o;
  int checked = 0;
  for (int n = 2; n <= 5; ++n) {
    auto g = build("a" + std::to_string(n - 1));
    auto strata = compute_strata(g);
    auto qi = all_qindices(g, strata);
    for (const auto& c : fractions(12, Rational(0), Rational(3), true)) {
      bool got = support_from_qindices(strata, qi, param_point_uniform(g, c)).finite_dimensional;
      bool oracle = oracle_finite(n, c);
      bool closed = c.get_den() == n;
      o.require(got == oracle, "S" + std::to_string(n) + " c=" + c.get_str() + ": engine vs oracle");
      o.require(oracle == closed, "S" + std::to_string(n) + " c=" + c.get_str() + ": oracle vs m/n");
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " (n, c) pairs";
  return o;
}

Outcome criterion7() {
  Outcome o;
  int exclusions = 0, points = 0;
  for (const char* spec : {"cyclic:2", "a2", "b2"}) {
    auto g = build(spec);
    auto strata = compute_strata(g);
    auto qi = all_qindices(g, strata);
    for (const auto& c : fractions(8, Rational(-2), Rational(2), false)) {
      auto p = param_point_uniform(g, c);
      auto e = support_via_exponential(g, strata, p, 10);
      auto s = support_from_qindices(strata, qi, p);
      for (std::size_t i = 0; i < strata.strata.size(); ++i) {
        if (e.strata[i].certified && !e.strata[i].in_support) {
          ++exclusions;
          o.require(!s.strata[i].in_support,
                    std::string(spec) + " c=" + c.get_str() + " " + strata.strata[i].id + ": exponential excludes, Schur keeps");
        }
      }
      ++points;
    }
  }
  if (o.ok) o.detail = std::to_string(points) + " points, " + std::to_string(exclusions) + " certified exclusions";
  o.require(exclusions > 0, "no certified exclusions at all");
  return o;
}

bool is_candidate_factor(const LaurentPoly& f, const std::vector<LaurentPoly>& cfs, int d) {
  for (int m = 1; m <= d; ++m)
    for (const auto& cf : cfs)
      if (f.equal_up_to_unit(LaurentPoly::constant(f.vars(), CycloNum(static_cast<long>(m))) - cf)) return true;
  return false;
}

Outcome criterion8() {
  Outcome o;
  int checks = 0;
  auto count = [&](bool ok, const std::string& what) {
    ++checks;
    o.require(ok, what);
  };
  for (const char* spec : {"a2", "b2", "grpn:3,1,1"}) {
    auto g = build(spec);
    std::size_t n = g.rank();
    std::vector<CycloNum> coords;
    for (std::size_t i = 0; i < g.coords().size(); ++i) coords.push_back(CycloNum(make_rational(2 * i + 1, 7)));
    DunklSystem<CycloNum> dk(g, coords);
    for (int d = 0; d <= 6; ++d)
      for (const auto& e : monomials_of_degree(n, d)) {
        auto f = XPoly<CycloNum>::monomial(n, e, CycloNum(1));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            count(dk.apply_basis(i, dk.apply_basis(j, f)) == dk.apply_basis(j, dk.apply_basis(i, f)),
                  std::string(spec) + ": Dunkl operators do not commute");
        for (int w = 0; w < static_cast<int>(g.size()); ++w) {
          Mat m = g.matrix(w);
          for (std::size_t i = 0; i < n; ++i) {
            Vec y(n, CycloNum(0)), wy(n);
            y[i] = CycloNum(1);
            for (std::size_t k = 0; k < n; ++k) wy[k] = m[k][i];
            count(dk.act(w, dk.apply(y, f)) == dk.apply(wy, dk.act(w, f)), std::string(spec) + ": not equivariant");
          }
        }
        count(euler_check(dk, f, d), std::string(spec) + ": Euler identity");
      }
    // truncation: y_i g_d = lambda_i g_{d-1}
    auto strata = compute_strata(g);
    Vec lambda = choose_lambda(g, strata.strata[strata.open_index], 0);
    auto series = exp_series_numeric(g, coords, lambda, 6);
    count(series.status == NumericSeries::Status::Regular, std::string(spec) + ": series not regular");
    for (int d = 1; d < static_cast<int>(series.components.size()); ++d)
      for (std::size_t i = 0; i < n; ++i)
        count(dk.apply_basis(i, series.components[d]) == series.components[d - 1].scaled(lambda[i]),
              std::string(spec) + ": truncation identity at degree " + std::to_string(d));
  }
  for (const char* spec : {"a2", "b2"}) {
    auto g = build(spec);
    auto chars = compute_characters(g);
    std::vector<LaurentPoly> cfs;
    for (std::size_t f = 0; f < chars.size(); ++f) cfs.push_back(c_function_poly(g, c_function(g, chars, f)));
    Vec lambda{CycloNum(1), CycloNum(make_rational(2, 5))};
    auto s = exp_series_symbolic(g, lambda, 4, &chars);
    count(s.unfactored.empty(), std::string(spec) + ": denominator with an unexpected factor");
    for (const auto& f : s.denominator_factors)
      count(is_candidate_factor(f, cfs, 4), std::string(spec) + ": denominator factor " + f.str() + " outside the bound");
  }
  for (const char* spec : {"a2", "b2", "i2:5"}) {
    auto g = build(spec);
    HeckeAlgebra h(g);
    auto eps = h.epsilon();
    for (std::size_t s = 0; s < g.num_generators(); ++s)
      count(h.multiply(h.basis(g.generator(s)), eps) == eps, std::string(spec) + ": T_s eps != eps");
  }
  for (const char* spec : {"a1", "a3", "a4", "b3", "b4", "d4", "d5", "f4", "h3", "h4", "e6", "i2:5", "i2:7",
                           "i2:8", "grpn:2,1,3", "grpn:2,2,3", "grpn:1,1,4", "cyclic:2"}) {
    auto g = build(spec);
    std::map<std::string, CycloNum> ones;
    for (const auto& v : param_vars(g)) ones[v] = CycloNum(1);
    CycloNum at1 = poincare_polynomial(g).eval(ones);
    count(at1 == CycloNum(static_cast<long>(g.size())), std::string(spec) + ": Poincare(1) != |W|");
  }
  if (o.ok) o.detail = std::to_string(checks) + " checks";
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (const char* spec : {"a1", "a2", "b2"}) {
    auto g = build(spec);
    HeckeAlgebra h(g);
    auto vars = param_vars(g);
    LaurentPoly inv_sum(vars);
    for (int w = 0; w < static_cast<int>(g.size()); ++w) {
      auto qw = h.q_of(w);
      for (const auto& [e, c] : qw.terms()) {
        Exponent neg = e;
        for (auto& v : neg) v = -v;
        inv_sum.add_term(neg, c.inv());
      }
    }
    auto t = schur_from_trace(g);
    o.require(t.poly == inv_sum, std::string(spec) + ": trace route " + t.poly.str() + " vs " + inv_sum.str());
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::ifstream in(table_path());
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  auto table = SchurTable::parse(text);
  auto strip = [](const std::string& s) {
    std::string out;
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
  };
  o.require(strip(table.serialize()) == strip(text), "re-serialized table differs");
  for (const char* grp : {"G4", "G23", "G24"}) o.require(table.find(grp, "1") != nullptr, std::string("no row ") + grp);
  auto h3 = build("h3");
  auto recomputed = schur_from_poly(poincare_polynomial(h3), SchurSource::Poincare);
  const auto* row = table.find("G23", "1");
  if (row) {
    auto el = table.element(*row);
    o.require(same_factors(el.factorization.factors, recomputed.factorization.factors),
              "G23 row differs from the recomputation");
  }
  return o;
}

}  // namespace

int main() {
  run(1, kLimit1, criterion1);
  run(2, kLimit2, criterion2);
  run(3, kLimit3, [] {
    Outcome o = table_row_check("f4", "G28");
    Outcome h4 = table_row_check("h4", "G30");
    o.require(h4.ok, h4.detail);
    if (o.ok) o.detail = "F4 and H4 rows";
    return o;
  });
  run(4, kLimit4, criterion4);
  run(5, kLimit5, criterion5);
  run(6, kLimit6, criterion6);
  run(7, kLimit7, criterion7);
  run(8, kLimit8, criterion8);
  run(9, kLimit9, criterion9);
  run(10, kLimit10, criterion10);
  std::printf("%s\n", failures == 0 ? "all criteria pass" : "some criteria fail");
  return failures == 0 ? 0 : 1;
}
