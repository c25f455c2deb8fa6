#include "cherednik/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "cherednik/errors.hpp"

namespace cherednik {

LaurentPoly::LaurentPoly(const CycloNum& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

LaurentPoly::LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, const CycloNum& c) {
  LaurentPoly p(std::move(vars));
  p.add_term(Exponent(p.nvars(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> vars, std::size_t index) {
  Exponent e(vars.size(), 0);
  e.at(index) = 1;
  return monomial(std::move(vars), std::move(e));
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exponent exps, const CycloNum& c) {
  if (exps.size() != vars.size()) throw InternalError("monomial length does not match variables");
  LaurentPoly p(std::move(vars));
  p.add_term(exps, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

CycloNum LaurentPoly::constant_term() const { return coefficient(Exponent(nvars(), 0)); }

CycloNum LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycloNum(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const CycloNum& c) {
  if (c.is_zero()) return;
  if (e.size() != vars_.size()) throw InternalError("exponent length does not match variables");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentPoly::adopt_vars(const LaurentPoly& o) {
  if (vars_ == o.vars_) return;
  if (vars_.empty()) {
    TermMap moved;
    for (auto& [e, c] : terms_) moved.emplace(Exponent(o.nvars(), 0), c);
    vars_ = o.vars_;
    terms_ = std::move(moved);
    return;
  }
  if (o.vars_.empty()) return;
  throw InternalError("Laurent polynomial variable lists differ");
}

namespace {

// Returns o re-expressed over target when o is a variable-free constant.
const LaurentPoly& aligned(const LaurentPoly& o, const std::vector<std::string>& target, LaurentPoly& storage) {
  if (o.vars() == target || !o.vars().empty()) return o;
  storage = LaurentPoly(target);
  for (const auto& [e, c] : o.terms()) storage.add_term(Exponent(target.size(), 0), c);
  return storage;
}

}  // namespace

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  adopt_vars(o);
  LaurentPoly tmp;
  const LaurentPoly& rhs = aligned(o, vars_, tmp);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  adopt_vars(o);
  LaurentPoly tmp;
  const LaurentPoly& rhs = aligned(o, vars_, tmp);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    LaurentPoly z(a.vars().empty() ? b.vars() : a.vars());
    return z;
  }
  LaurentPoly out(a.vars().empty() ? b.vars() : a.vars());
  if (!a.vars().empty() && !b.vars().empty() && a.vars() != b.vars())
    throw InternalError("Laurent polynomial variable lists differ");
  LaurentPoly ta, tb;
  const LaurentPoly& aa = aligned(a, out.vars(), ta);
  const LaurentPoly& bb = aligned(b, out.vars(), tb);
  Exponent e(out.nvars());
  for (const auto& [ea, ca] : aa.terms()) {
    for (const auto& [eb, cb] : bb.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() == b.vars()) return a.terms() == b.terms();
  if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
  if (a.vars().empty() || b.vars().empty()) return false;
  throw InternalError("comparing Laurent polynomials over different variables");
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = LaurentPoly::constant(vars_, CycloNum(1));
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::scaled(const CycloNum& c) const {
  LaurentPoly out(vars_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += s.at(i);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& o) const {
  if (o.is_zero()) throw DivisionByZero();
  LaurentPoly rem = *this;
  LaurentPoly tmp;
  if (rem.vars_.empty() && !o.vars_.empty()) rem.adopt_vars(o);
  const LaurentPoly& div = aligned(o, rem.vars_, tmp);
  if (div.vars_ != rem.vars_) throw InternalError("Laurent polynomial variable lists differ");
  LaurentPoly quot(rem.vars_);
  if (rem.is_zero()) return quot;
  std::size_t n = rem.nvars();
  Exponent lo(n), hi(n);
  Exponent amin = rem.min_exponents(), amax = rem.max_exponents();
  Exponent bmin = div.min_exponents(), bmax = div.max_exponents();
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = amin[i] - bmin[i];
    hi[i] = amax[i] - bmax[i];
    if (lo[i] > hi[i]) return std::nullopt;
  }
  const auto& [lead_e, lead_c] = *div.terms_.rbegin();
  CycloNum lead_inv = lead_c.inv();
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = re[i] - lead_e[i];
      if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
    }
    CycloNum c = rc * lead_inv;
    quot.add_term(e, c);
    for (const auto& [de, dc] : div.terms_) {
      Exponent f(n);
      for (std::size_t i = 0; i < n; ++i) f[i] = de[i] + e[i];
      rem.add_term(f, -(dc * c));
    }
  }
  return quot;
}

CycloNum LaurentPoly::eval(const std::map<std::string, CycloNum>& values) const {
  std::vector<CycloNum> v(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = values.find(vars_[i]);
    if (it == values.end()) throw InvalidInput("no value for variable '" + vars_[i] + "'");
    v[i] = it->second;
  }
  CycloNum acc(0);
  for (const auto& [e, c] : terms_) {
    CycloNum t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && v[i].is_zero())
        throw InvalidInput("variable '" + vars_[i] + "' is zero but appears with a negative exponent");
      t *= v[i].pow(e[i]);
    }
    acc += t;
  }
  return acc;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& images,
                                    const std::vector<std::string>& target_vars) const {
  std::vector<LaurentPoly> img(nvars());
  std::vector<std::optional<LaurentPoly>> inv(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = images.find(vars_[i]);
    if (it == images.end()) throw InvalidInput("no image for variable '" + vars_[i] + "'");
    LaurentPoly tmp;
    img[i] = aligned(it->second, target_vars, tmp);
    if (img[i].vars() != target_vars) throw InternalError("substitution image over wrong variables");
  }
  LaurentPoly out(target_vars);
  for (const auto& [e, c] : terms_) {
    LaurentPoly t = LaurentPoly::constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) {
        t *= img[i].pow(static_cast<unsigned>(e[i]));
      } else if (e[i] < 0) {
        if (!img[i].is_monomial())
          throw InvalidInput("negative power of a non-monomial substitution for '" + vars_[i] + "'");
        const auto& [me, mc] = *img[i].terms().begin();
        Exponent ne(me.size());
        for (std::size_t k = 0; k < me.size(); ++k) ne[k] = -me[k];
        t *= LaurentPoly::monomial(target_vars, ne, mc.inv()).pow(static_cast<unsigned>(-e[i]));
      }
    }
    out += t;
  }
  return out;
}

LaurentPoly LaurentPoly::with_vars(const std::vector<std::string>& target_vars) const {
  std::vector<std::size_t> pos(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = std::find(target_vars.begin(), target_vars.end(), vars_[i]);
    if (it == target_vars.end()) throw InvalidInput("variable '" + vars_[i] + "' missing from target list");
    pos[i] = static_cast<std::size_t>(it - target_vars.begin());
  }
  LaurentPoly out(target_vars);
  for (const auto& [e, c] : terms_) {
    Exponent f(target_vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[pos[i]] = e[i];
    out.add_term(f, c);
  }
  return out;
}

Exponent LaurentPoly::min_exponents() const {
  Exponent m(nvars(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Exponent LaurentPoly::max_exponents() const {
  Exponent m(nvars(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::max(m[i], e[i]);
    first = false;
  }
  return m;
}

int LaurentPoly::degree_in(std::size_t var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    d = first ? e.at(var) : std::max(d, e.at(var));
    first = false;
  }
  return d;
}

int LaurentPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

std::pair<Exponent, CycloNum> LaurentPoly::unit_part() const {
  if (is_zero()) throw DivisionByZero();
  Exponent m = min_exponents();
  Exponent first = terms_.begin()->first;  // shifting preserves lex order
  return {m, terms_.begin()->second};
  (void)first;
}

LaurentPoly LaurentPoly::unit_normalized() const {
  if (is_zero()) return *this;
  auto [m, c] = unit_part();
  Exponent neg(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
  return shifted(neg).scaled(c.inv());
}

bool LaurentPoly::equal_up_to_unit(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return unit_normalized() == o.unit_normalized();
}

std::string format_monomial(const Exponent& e, const std::vector<std::string>& vars) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << "*";
    os << vars[i];
    if (e[i] != 1) os << "^" << e[i];
    first = false;
  }
  return first ? "1" : os.str();
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = format_monomial(e, vars_);
    bool neg = c.is_rational() && c.to_rational() < 0;
    CycloNum mag = neg ? -c : c;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    std::string cs = mag.is_rational() ? mag.str() : "(" + mag.str() + ")";
    if (mono == "1") os << cs;
    else if (mag.is_one()) os << mono;
    else os << cs << "*" << mono;
    first = false;
  }
  return os.str();
}

DenseUnivariate to_dense(const LaurentPoly& p) {
  if (p.nvars() > 1) throw InternalError("to_dense needs a univariate polynomial");
  DenseUnivariate d;
  if (p.is_zero()) return d;
  if (p.nvars() == 0) {
    d.coeffs = {p.constant_term()};
    return d;
  }
  int lo = p.min_exponents()[0], hi = p.max_exponents()[0];
  d.shift = lo;
  d.coeffs.assign(static_cast<std::size_t>(hi - lo + 1), CycloNum(0));
  for (const auto& [e, c] : p.terms()) d.coeffs[static_cast<std::size_t>(e[0] - lo)] = c;
  return d;
}

Exponent parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
  Exponent e(vars.size(), 0);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty() || s == "1") return e;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t star = s.find('*', pos);
    std::string tok = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    std::size_t caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    int power = 1;
    if (caret != std::string::npos) {
      try {
        std::size_t used = 0;
        power = std::stoi(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw InvalidInput("bad exponent in monomial '" + text + "'");
      }
    }
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw InvalidInput("unknown variable '" + name + "' in monomial '" + text + "'");
    e[static_cast<std::size_t>(it - vars.begin())] += power;
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return e;
}

}  // namespace cherednik
