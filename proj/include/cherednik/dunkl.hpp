#pragma once

#include <map>
#include <string>
#include <vector>

#include "cherednik/characters.hpp"
#include "cherednik/xpoly.hpp"

namespace cherednik {

/// Names of the symbolic parameter variables, "c_x1", "c_y1", ...
std::vector<std::string> c_vars(const ReflectionGroup& g);
/// The coordinates c_{H,j} as degree-one polynomials in c_vars(g).
std::vector<LaurentPoly> symbolic_coords(const ReflectionGroup& g);
/// c_E as a polynomial in c_vars(g).
LaurentPoly c_function_poly(const ReflectionGroup& g, const CFunction& f);

/// Dunkl operators of g with parameters given by c_{H,j} coordinate values.
template <class S>
class DunklSystem {
 public:
  DunklSystem(const ReflectionGroup& g, const std::vector<S>& coord_values);

  const ReflectionGroup& group() const { return g_; }
  std::size_t rank() const { return g_.rank(); }

  /// (w.f)(v) = f(w^-1 v).
  XPoly<S> act(int w, const XPoly<S>& f) const;
  /// y(f) = d_y f - sum_r c_r <alpha_r, y> (f - r.f) / alpha_r.
  XPoly<S> apply(const Vec& y, const XPoly<S>& f) const;
  XPoly<S> apply_basis(std::size_t i, const XPoly<S>& f) const;
  /// sum_r c_r (f - r.f)
  XPoly<S> reflection_sum(const XPoly<S>& f) const;
  /// M[I][J] = constant term of y^I x^J over monomials of degree d.
  Matrix<S> pairing_matrix(int d) const;
  /// y_i on monomials: rows are degree d-1 monomials, columns degree d.
  const Matrix<S>& operator_matrix(std::size_t i, int d) const;

 private:
  const std::vector<S>& pairing_row(const Exponent& a) const;

  struct Refl {
    int element;
    std::size_t hyperplane;
    S c;
  };
  const XPoly<CycloNum>& image(int w, const Exponent& e) const;

  const ReflectionGroup& g_;
  std::vector<Refl> refl_;
  mutable std::map<int, Mat> inv_matrix_;
  mutable std::map<std::pair<int, Exponent>, XPoly<CycloNum>> image_cache_;
  mutable std::map<std::pair<std::size_t, int>, Matrix<S>> op_cache_;
  mutable std::map<Exponent, std::vector<S>> row_cache_;
};

extern template class DunklSystem<CycloNum>;
extern template class DunklSystem<LaurentPoly>;

/// Checks sum_i x_i y_i(f) = d f - sum_r c_r (f - r.f) for f homogeneous of degree d.
template <class S>
bool euler_check(const DunklSystem<S>& dunkl, const XPoly<S>& f, int d);

/// Affine condition sum a_i c_i = b on the parameter coordinates.
struct LinearCondition {
  std::vector<std::string> vars;
  std::vector<CycloNum> a;
  CycloNum b;

  std::string str() const;
  friend bool operator==(const LinearCondition& x, const LinearCondition& y) { return x.a == y.a && x.b == y.b; }
};
/// The condition p = 0 for p of degree one, scaled to integer coprime
/// coefficients when rational with the first nonzero a positive.
std::optional<LinearCondition> linear_condition(const LaurentPoly& p);

struct ExpSeries {
  Vec lambda;
  int max_degree = 0;
  std::vector<std::string> cvars;
  std::vector<XPoly<LaurentPoly>> numerators;  // per degree; component g_d = numerator / denominator
  std::vector<LaurentPoly> denominators;
  std::vector<LaurentPoly> denominator_factors;  // distinct, in order of appearance
  std::vector<LaurentPoly> unfactored;           // denominators not split into known linear factors
};

/// e_lambda to degree D over the parameter polynomials. With characters the
/// denominators are split over the candidate factors m - c_F.
ExpSeries exp_series_symbolic(const ReflectionGroup& g, const Vec& lambda, int D, const CharacterData* chars = nullptr);

/// Conditions c such that some degree <= D component has a pole, as affine
/// conditions (one-sided: only degrees up to D are examined).
std::vector<LinearCondition> singular_hyperplanes(const ExpSeries& s);

struct NumericSeries {
  enum class Status { Regular, Pole, Indeterminate };
  std::vector<XPoly<CycloNum>> components;  // empty polynomial at degrees that failed
  Status status = Status::Regular;
  int degree = -1;  // first degree with a pole, or first singular degree when indeterminate
};

/// e_lambda at exact parameter values. A degree whose pairing is singular and
/// whose system is inconsistent has a pole there; a singular consistent
/// system leaves the question open.
NumericSeries exp_series_numeric(const ReflectionGroup& g, const std::vector<CycloNum>& coord_values,
                                 const Vec& lambda, int D);

/// The dual basis f_I (f^v_I = y^I) of degree d at exact parameter values,
/// by solving the pairing. Throws Undecidable when the pairing is singular.
std::vector<XPoly<CycloNum>> dual_basis_solve(const DunklSystem<CycloNum>& dunkl, int d);
/// The same basis from the isotypic recursion f_I = sum_F 1/(d - c_F) e_F(sum_i x_i f_{I-e_i}).
std::vector<XPoly<CycloNum>> dual_basis_recursion(const DunklSystem<CycloNum>& dunkl, const CharacterData& chars,
                                                  const std::vector<CycloNum>& coord_values, int d);

/// Checks d_c d + d d_c = d + p - c_F on each F-isotypic part of C[V]^d x Lambda^p V*.
bool derham_check(const DunklSystem<CycloNum>& dunkl, const CharacterData& chars,
                  const std::vector<CycloNum>& coord_values, int d, int p);

}  // namespace cherednik
