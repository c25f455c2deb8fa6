#include "cherednik/cyclofactor.hpp"

#include <algorithm>
#include <cctype>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

namespace {

struct PrimedSet {
  int n;
  int primes;
  std::vector<int> ks;
};

const std::vector<PrimedSet>& primed_sets() {
  static const std::vector<PrimedSet> sets = {
      {3, 1, {1}},          {3, 2, {2}},          {4, 1, {1}},          {4, 2, {3}},
      {6, 1, {1}},          {6, 2, {5}},          {12, 1, {1, 5}},      {12, 2, {7, 11}},
      {12, 3, {1, 7}},      {12, 4, {5, 11}},     {30, 1, {1, 11, 19, 29}},
      {30, 2, {7, 13, 17, 23}}, {30, 3, {1, 7, 13, 19}}, {30, 4, {11, 17, 23, 29}},
  };
  return sets;
}

std::string phi_name(int n, int primes) { return "Phi" + std::to_string(n) + std::string(primes, '\''); }

int parse_positive(const std::string& s, const std::string& label) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); }))
    throw InvalidInput("unknown cyclotomic label '" + label + "'");
  int v = std::stoi(s);
  if (v < 1) throw InvalidInput("unknown cyclotomic label '" + label + "'");
  return v;
}

Rational angle_of(const CycloNum& root) {
  auto a = root.root_of_unity_angle();
  if (!a) throw InternalError("factor root is not a root of unity: " + root.str());
  return *a;
}

CycloNum root_at(const Rational& angle) {
  long d = angle.get_den().get_si();
  long k = angle.get_num().get_si();
  return CycloNum::zeta(static_cast<int>(d), k);
}

bool key_less(const CycloFactor& a, const Rational& aa, const CycloFactor& b, const Rational& ba) {
  if (a.monomial != b.monomial) return a.monomial < b.monomial;
  return aa < ba;
}

using Terms = std::vector<std::pair<Exponent, std::complex<double>>>;

Terms numeric_terms(const LaurentPoly& p) {
  Terms t;
  t.reserve(p.size());
  for (const auto& [e, c] : p.terms()) t.emplace_back(e, c.to_complex());
  return t;
}

// Tests numerically whether p vanishes on the torus coset {x^a = exp(2 pi i theta)}.
bool vanishes_on(const Terms& terms, double scale, const Exponent& a, double theta, std::mt19937_64& rng) {
  std::size_t n = a.size();
  std::size_t k = 0;
  while (a[k] == 0) ++k;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> phase(n);
  double rest = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    phase[j] = u(rng);
    rest += a[j] * phase[j];
  }
  phase[k] = (theta - rest) / a[k];
  std::complex<double> acc = 0;
  for (const auto& [e, c] : terms) {
    double ang = 0;
    for (std::size_t j = 0; j < n; ++j) ang += e[j] * phase[j];
    acc += c * std::polar(1.0, 2.0 * std::numbers::pi * ang);
  }
  return std::abs(acc) <= 1e-7 * scale;
}

std::vector<Exponent> candidate_monomials(const Exponent& span) {
  std::vector<Exponent> out;
  std::size_t n = span.size();
  if (n == 1) return {Exponent{1}};
  Exponent cur(n);
  for (std::size_t i = 0; i < n; ++i) cur[i] = -span[i];
  while (true) {
    std::size_t lead = 0;
    while (lead < n && cur[lead] == 0) ++lead;
    if (lead < n && cur[lead] > 0) {
      int g = 0;
      for (int v : cur) g = std::gcd(g, std::abs(v));
      if (g == 1) out.push_back(cur);
    }
    std::size_t i = 0;
    while (i < n && cur[i] == span[i]) {
      cur[i] = -span[i];
      ++i;
    }
    if (i == n) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end(), [](const Exponent& x, const Exponent& y) {
    int sx = 0, sy = 0;
    for (int v : x) sx += std::abs(v);
    for (int v : y) sy += std::abs(v);
    return sx != sy ? sx < sy : x < y;
  });
  return out;
}

}  // namespace

std::vector<Rational> phi_label_roots(const std::string& label) {
  if (label.rfind("Psi", 0) == 0) {
    auto us = label.find('_');
    if (us == std::string::npos) throw InvalidInput("unknown cyclotomic label '" + label + "'");
    int n = parse_positive(label.substr(3, us - 3), label);
    int k = parse_positive(label.substr(us + 1), label);
    if (k >= n && !(n == 1 && k == 1)) throw InvalidInput("unknown cyclotomic label '" + label + "'");
    return {frac(make_rational(k, n))};
  }
  if (label.rfind("Phi", 0) != 0) throw InvalidInput("unknown cyclotomic label '" + label + "'");
  std::size_t end = label.size();
  int primes = 0;
  while (end > 3 && label[end - 1] == '\'') {
    --end;
    ++primes;
  }
  int n = parse_positive(label.substr(3, end - 3), label);
  std::vector<Rational> out;
  if (primes == 0) {
    if (n > 2000) throw InvalidInput("cyclotomic index too large in '" + label + "'");
    for (int k = 0; k < n; ++k)
      if (std::gcd(k, n) == 1) out.push_back(make_rational(k, n));
    return out;
  }
  for (const auto& s : primed_sets())
    if (s.n == n && s.primes == primes) {
      for (int k : s.ks) out.push_back(make_rational(k, n));
      return out;
    }
  throw InvalidInput("unknown cyclotomic label '" + label + "'");
}

LaurentPoly factor_poly(const CycloFactor& f, const std::vector<std::string>& vars) {
  return LaurentPoly::monomial(vars, f.monomial) - LaurentPoly::constant(vars, f.root);
}

LaurentPoly phi_poly(const std::string& label, const std::string& var) {
  std::vector<std::string> vars = {var};
  if (label.rfind("Phi", 0) == 0 && label.back() != '\'') {
    phi_label_roots(label);
    int n = std::stoi(label.substr(3));
    LaurentPoly p(vars);
    const auto& c = cyclotomic_coefficients(n);
    for (std::size_t i = 0; i < c.size(); ++i) p.add_term({static_cast<int>(i)}, CycloNum(c[i]));
    return p;
  }
  LaurentPoly p = LaurentPoly::constant(vars, CycloNum(1));
  for (const auto& a : phi_label_roots(label)) p *= factor_poly({{1}, root_at(a), 1}, vars);
  return p;
}

LaurentPoly Factorization::product() const {
  LaurentPoly p = LaurentPoly::constant(vars, CycloNum(1));
  for (const auto& f : factors) p *= factor_poly(f, vars).pow(static_cast<unsigned>(f.multiplicity));
  return p;
}

LaurentPoly Factorization::expand() const {
  Exponent m = unit_monomial;
  m.resize(vars.size(), 0);
  return LaurentPoly::monomial(vars, m, unit_scalar) * product() * remainder;
}

Factorization factor_unity_roots(const LaurentPoly& p, int bound) {
  if (p.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  if (bound < 1) throw InvalidInput("unity bound must be positive");
  Factorization out;
  out.vars = p.vars();
  std::size_t n = p.nvars();
  if (n == 0) {
    out.unit_scalar = p.constant_term();
    out.remainder = LaurentPoly(CycloNum(1));
    return out;
  }
  out.unit_monomial = p.min_exponents();
  Exponent neg(n);
  for (std::size_t i = 0; i < n; ++i) neg[i] = -out.unit_monomial[i];
  LaurentPoly rest = p.shifted(neg);

  std::vector<Rational> angles;
  for (int d = 1; d <= bound; ++d)
    for (int k = 0; k < d; ++k)
      if (std::gcd(k, d) == 1) angles.push_back(make_rational(k, d));

  std::mt19937_64 rng(12345);
  Exponent span = rest.max_exponents();
  for (const Exponent& a : candidate_monomials(span)) {
    bool fits = true;
    Exponent cur = rest.max_exponents(), lo = rest.min_exponents();
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(a[i]) > cur[i] - lo[i]) fits = false;
    if (!fits || rest.is_monomial()) continue;
    Terms terms = numeric_terms(rest);
    double scale = 0;
    for (const auto& t : terms) scale += std::abs(t.second);
    for (const Rational& ang : angles) {
      if (!vanishes_on(terms, scale, a, ang.get_d(), rng)) continue;
      CycloFactor f{a, root_at(ang), 0};
      LaurentPoly fp = factor_poly(f, out.vars);
      while (auto q = rest.divide_exact(fp)) {
        rest = std::move(*q);
        ++f.multiplicity;
      }
      if (f.multiplicity > 0) {
        out.factors.push_back(f);
        terms = numeric_terms(rest);
        scale = 0;
        for (const auto& t : terms) scale += std::abs(t.second);
        if (rest.is_monomial()) break;
      }
    }
  }
  if (rest.is_monomial()) {
    const auto& [e, c] = *rest.terms().begin();
    for (std::size_t i = 0; i < n; ++i) out.unit_monomial[i] += e[i];
    out.unit_scalar = c;
    out.remainder = LaurentPoly::constant(out.vars, CycloNum(1));
  } else {
    Exponent m = rest.min_exponents();
    for (std::size_t i = 0; i < n; ++i) {
      out.unit_monomial[i] += m[i];
      neg[i] = -m[i];
    }
    out.remainder = rest.shifted(neg);
  }
  return out;
}

CycloFactor orient_factor(const CycloFactor& f) {
  std::size_t lead = 0;
  while (lead < f.monomial.size() && f.monomial[lead] == 0) ++lead;
  if (lead == f.monomial.size() || f.monomial[lead] > 0) return f;
  CycloFactor g = f;
  for (int& v : g.monomial) v = -v;
  g.root = f.root.inv();
  return g;
}

std::vector<CycloFactor> canonical_factors(std::vector<CycloFactor> fs) {
  std::vector<std::pair<CycloFactor, Rational>> keyed;
  for (auto& f : fs) {
    CycloFactor g = orient_factor(f);
    Rational a = angle_of(g.root);
    keyed.emplace_back(std::move(g), a);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return key_less(x.first, x.second, y.first, y.second); });
  std::vector<CycloFactor> out;
  Rational last_angle;
  for (auto& [f, a] : keyed) {
    if (f.multiplicity == 0) continue;
    if (!out.empty() && out.back().monomial == f.monomial && last_angle == a) {
      out.back().multiplicity += f.multiplicity;
    } else {
      out.push_back(f);
      last_angle = a;
    }
  }
  return out;
}

bool same_factors(const std::vector<CycloFactor>& a, const std::vector<CycloFactor>& b) {
  auto ca = canonical_factors(a), cb = canonical_factors(b);
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i].monomial != cb[i].monomial || ca[i].multiplicity != cb[i].multiplicity || ca[i].root != cb[i].root)
      return false;
  return true;
}

std::vector<LabelGroup> group_labels(const std::vector<CycloFactor>& factors) {
  std::map<Exponent, std::map<Rational, int>> per_mono;
  for (const auto& f : canonical_factors(factors)) per_mono[f.monomial][angle_of(f.root)] += f.multiplicity;

  std::vector<LabelGroup> out;
  for (auto& [mono, roots] : per_mono) {
    std::map<std::pair<int, int>, int> phi_counts;  // (n, primes) -> power
    std::vector<std::pair<Rational, int>> raw;
    auto take = [&](const std::vector<Rational>& want) {
      for (const auto& a : want) {
        auto it = roots.find(a);
        if (it == roots.end() || it->second == 0) return false;
      }
      for (const auto& a : want)
        if (--roots[a] == 0) roots.erase(a);
      return true;
    };
    std::vector<int> orders;
    for (const auto& [a, c] : roots) orders.push_back(static_cast<int>(a.get_den().get_si()));
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    for (auto it = orders.rbegin(); it != orders.rend(); ++it) {
      auto want = phi_label_roots(phi_name(*it, 0));
      while (take(want)) ++phi_counts[{*it, 0}];
    }
    for (const auto& s : primed_sets()) {
      std::vector<Rational> want;
      for (int k : s.ks) want.push_back(make_rational(k, s.n));
      while (take(want)) ++phi_counts[{s.n, s.primes}];
    }
    LabelGroup g;
    g.monomial = mono;
    for (const auto& [key, power] : phi_counts) {
      std::string l = phi_name(key.first, key.second);
      if (power > 1) l += "^" + std::to_string(power);
      g.labels.push_back(l);
    }
    for (const auto& [a, c] : roots) {
      std::string l = "Psi" + a.get_den().get_str() + "_" + a.get_num().get_str();
      if (c > 1) l += "^" + std::to_string(c);
      g.labels.push_back(l);
    }
    out.push_back(std::move(g));
  }
  std::stable_sort(out.begin(), out.end(), [](const LabelGroup& x, const LabelGroup& y) {
    int sx = 0, sy = 0;
    for (int v : x.monomial) sx += std::abs(v);
    for (int v : y.monomial) sy += std::abs(v);
    return sx != sy ? sx < sy : x.monomial > y.monomial;
  });
  return out;
}

std::vector<CycloFactor> ungroup_labels(const std::vector<LabelGroup>& groups) {
  std::vector<CycloFactor> out;
  for (const auto& g : groups) {
    for (const auto& label : g.labels) {
      std::string base = label;
      int power = 1;
      auto caret = label.find('^');
      if (caret != std::string::npos) {
        base = label.substr(0, caret);
        power = parse_positive(label.substr(caret + 1), label);
      }
      for (const auto& a : phi_label_roots(base)) out.push_back({g.monomial, root_at(a), power});
    }
  }
  return out;
}

std::string format_groups(const std::vector<LabelGroup>& groups, const std::vector<std::string>& vars) {
  if (groups.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& g : groups) {
    for (const auto& l : g.labels) {
      if (!first) os << ' ';
      os << l;
      first = false;
    }
    os << " (" << format_monomial(g.monomial, vars) << ")";
  }
  return os.str();
}

std::vector<LabelGroup> parse_groups(const std::string& text, const std::vector<std::string>& vars) {
  std::vector<LabelGroup> out;
  LabelGroup cur;
  std::size_t i = 0;
  std::string trimmed;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  if (trimmed == "1") return out;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      auto close = text.find(')', i);
      if (close == std::string::npos) throw InvalidInput("unbalanced parenthesis in '" + text + "'");
      if (cur.labels.empty()) throw InvalidInput("monomial without labels in '" + text + "'");
      cur.monomial = parse_monomial(text.substr(i + 1, close - i - 1), vars);
      if (std::all_of(cur.monomial.begin(), cur.monomial.end(), [](int v) { return v == 0; }))
        throw InvalidInput("constant monomial in '" + text + "'");
      out.push_back(std::move(cur));
      cur = LabelGroup{};
      i = close + 1;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '(') ++j;
    std::string label = text.substr(i, j - i);
    std::string base = label.substr(0, label.find('^'));
    phi_label_roots(base);
    if (base.size() != label.size()) parse_positive(label.substr(base.size() + 1), label);
    cur.labels.push_back(label);
    i = j;
  }
  if (!cur.labels.empty()) throw InvalidInput("labels without a monomial in '" + text + "'");
  return out;
}

}  // namespace cherednik
