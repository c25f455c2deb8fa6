#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/cyclo.hpp"

namespace cherednik {

using Exponent = std::vector<int>;

/// Multivariate Laurent polynomial over CycloNum with named variables.
///
/// A polynomial with an empty variable list is a constant; it combines with
/// any other polynomial by adopting that polynomial's variables. Otherwise
/// both operands must share the same variable list.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, CycloNum>;

  LaurentPoly() = default;
  LaurentPoly(const CycloNum& c);  // NOLINT: constants promote implicitly
  LaurentPoly(const Rational& c) : LaurentPoly(CycloNum(c)) {}  // NOLINT
  LaurentPoly(long c) : LaurentPoly(CycloNum(c)) {}              // NOLINT
  explicit LaurentPoly(std::vector<std::string> vars);

  static LaurentPoly constant(std::vector<std::string> vars, const CycloNum& c);
  static LaurentPoly variable(std::vector<std::string> vars, std::size_t index);
  static LaurentPoly monomial(std::vector<std::string> vars, Exponent exps, const CycloNum& c = CycloNum(1));

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term (coefficient of the zero exponent).
  CycloNum constant_term() const;
  CycloNum coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const CycloNum& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(unsigned e) const;
  LaurentPoly scaled(const CycloNum& c) const;
  LaurentPoly shifted(const Exponent& e) const;  // multiply by monomial

  /// Exact quotient in the Laurent ring, nullopt when o does not divide *this.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& o) const;

  CycloNum eval(const std::map<std::string, CycloNum>& values) const;
  /// Substitutes each named variable by a Laurent polynomial in target_vars.
  LaurentPoly substitute(const std::map<std::string, LaurentPoly>& images,
                         const std::vector<std::string>& target_vars) const;
  /// Same polynomial written over a (super)set of variables.
  LaurentPoly with_vars(const std::vector<std::string>& target_vars) const;

  /// Componentwise minimum / maximum exponent over all terms.
  Exponent min_exponents() const;
  Exponent max_exponents() const;
  int degree_in(std::size_t var) const;
  int total_degree() const;

  /// Divides out the lowest monomial and scales so that the coefficient of
  /// the lexicographically smallest term is 1. Two polynomials are equal up
  /// to a unit (scalar times monomial) iff their normalizations agree.
  LaurentPoly unit_normalized() const;
  /// The unit u with *this == u * unit_normalized().
  std::pair<Exponent, CycloNum> unit_part() const;
  bool equal_up_to_unit(const LaurentPoly& o) const;

  std::string str() const;

 private:
  void adopt_vars(const LaurentPoly& o);

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Univariate helpers: dense coefficient vector (index = exponent - shift).
struct DenseUnivariate {
  int shift = 0;
  std::vector<CycloNum> coeffs;
};
DenseUnivariate to_dense(const LaurentPoly& p);

/// Parses "x1^2*y1" style monomials over the given variable list.
Exponent parse_monomial(const std::string& text, const std::vector<std::string>& vars);
std::string format_monomial(const Exponent& e, const std::vector<std::string>& vars);

}  // namespace cherednik
