#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/linalg.hpp"

namespace cherednik {

/// Polynomial in x_1..x_n with coefficients in S (CycloNum, or LaurentPoly
/// in the parameter coordinates for symbolic work).
template <class S>
class XPoly {
 public:
  using Terms = std::map<Exponent, S>;

  explicit XPoly(std::size_t n = 0) : n_(n) {}
  static XPoly constant(std::size_t n, const S& c) {
    XPoly p(n);
    p.add_term(Exponent(n, 0), c);
    return p;
  }
  static XPoly monomial(std::size_t n, Exponent e, const S& c) {
    XPoly p(n);
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }
  bool is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_)
      if (total(e) != d) return false;
    return true;
  }
  S coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S() : it->second;
  }
  S constant_term() const { return coefficient(Exponent(n_, 0)); }

  void add_term(const Exponent& e, const S& c) {
    if (scalar_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second = it->second + c;
    if (scalar_is_zero(it->second)) terms_.erase(it);
  }

  XPoly& operator+=(const XPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  XPoly& operator-=(const XPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, S() - c);
    return *this;
  }
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly out(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e = ea;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

  template <class T>
  XPoly scaled(const T& c) const {
    XPoly out(n_);
    for (const auto& [e, v] : terms_) out.add_term(e, v * S(c));
    return out;
  }
  XPoly times_var(std::size_t i) const {
    XPoly out(n_);
    for (const auto& [e, v] : terms_) {
      Exponent f = e;
      ++f[i];
      out.terms_.emplace(std::move(f), v);
    }
    return out;
  }
  XPoly partial(std::size_t i) const {
    XPoly out(n_);
    for (const auto& [e, v] : terms_) {
      if (e[i] == 0) continue;
      Exponent f = e;
      --f[i];
      out.add_term(f, v * S(CycloNum(static_cast<long>(e[i]))));
    }
    return out;
  }
  /// Directional derivative along y.
  XPoly derivative(const Vec& y) const {
    XPoly out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (!y[i].is_zero()) out += partial(i).scaled(y[i]);
    return out;
  }

  /// Exact quotient by the linear form sum alpha_i x_i, nullopt if inexact.
  std::optional<XPoly> divide_linear(const Vec& alpha) const {
    std::size_t p = 0;
    while (p < n_ && alpha[p].is_zero()) ++p;
    if (p == n_) return std::nullopt;
    CycloNum inv = alpha[p].inv();
    XPoly rem = *this, quo(n_);
    while (!rem.is_zero()) {
      // the term of highest x_p-degree
      auto best = rem.terms_.begin();
      for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
        if (it->first[p] > best->first[p]) best = it;
      if (best->first[p] == 0) return std::nullopt;
      Exponent e = best->first;
      --e[p];
      S c = best->second * S(inv);
      quo.add_term(e, c);
      for (std::size_t i = 0; i < n_; ++i) {
        if (alpha[i].is_zero()) continue;
        Exponent f = e;
        ++f[i];
        rem.add_term(f, S() - c * S(alpha[i]));
      }
    }
    return quo;
  }

  template <class Eval>
  XPoly<CycloNum> map_coefficients(Eval&& ev) const {
    XPoly<CycloNum> out(n_);
    for (const auto& [e, v] : terms_) out.add_term(e, ev(v));
    return out;
  }

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  static int total(const Exponent& e) {
    int t = 0;
    for (int v : e) t += v;
    return t;
  }

  std::size_t n_;
  Terms terms_;
};

inline std::string scalar_str(const CycloNum& c) { return c.str(); }
inline std::string scalar_str(const LaurentPoly& c) { return c.str(); }

template <class S>
std::string XPoly<S>::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < n_; ++i) {
      if (it->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.empty() ? "x" + std::to_string(i + 1) : names[i];
      if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
    }
    std::string c = scalar_str(it->second);
    if (mono.empty()) out += c;
    else if (c == "1") out += mono;
    else out += "(" + c + ")*" + mono;
  }
  return out;
}

/// Exponent vectors of total degree d in n variables, lexicographically descending.
std::vector<Exponent> monomials_of_degree(std::size_t n, int d);

}  // namespace cherednik
