#pragma once

#include <string>
#include <vector>

#include "cherednik/cyclofactor.hpp"
#include "cherednik/group.hpp"
#include "cherednik/strata.hpp"

namespace cherednik {

enum class SchurSource { Poincare, Gr1n, Trace, Table };
std::string to_string(SchurSource s);

/// A Schur element (or a ratio of two) over the parameter variables of a group,
/// q_{H,j} being named after the coordinate c_{H,j} ("x1", "y1", ...).
struct SchurElement {
  std::vector<std::string> vars;
  LaurentPoly poly;
  Factorization factorization;
  SchurSource source = SchurSource::Poincare;

  std::vector<LabelGroup> groups() const { return group_labels(factorization.factors); }
  std::string text() const { return format_groups(groups(), vars); }
};

SchurElement schur_from_poly(const LaurentPoly& p, SchurSource source, int bound = 60);
/// Builds the element from a factor list; poly is the product of the factors.
SchurElement schur_from_factors(const std::vector<std::string>& vars, const std::vector<CycloFactor>& factors,
                                SchurSource source);

std::vector<std::string> param_vars(const ReflectionGroup& g);

/// Sum of q_w over the standard parabolic W_J (all of W when subset is null).
/// Requires has_coxeter_generators().
LaurentPoly poincare_polynomial(const ReflectionGroup& g, const std::vector<int>* subset = nullptr);

/// Shape of a stratum of G(r,1,n) (or a cyclic group): sizes of the blocks
/// of proportional nonzero coordinates and the number of zero coordinates.
struct Gr1nShape {
  std::vector<int> blocks;
  int zeros = 0;
};
Gr1nShape gr1n_shape(const ReflectionGroup& g, const Stratum& s);

/// The G(r,1,n) Schur element of the trivial character in the variables
/// q, Q0, ..., Q{r-1}.
LaurentPoly gr1n_schur_native(int r, int n);
/// Its ratio by the parabolic of the given shape, same variables.
LaurentPoly gr1n_qindex_native(int r, int n, const Gr1nShape& shape);
/// Rewrites a polynomial in q, Q_j into the group's parameter variables.
LaurentPoly gr1n_to_group_vars(const LaurentPoly& p, const ReflectionGroup& g);
/// Factor list of the q-index directly in the group's variables.
std::vector<CycloFactor> gr1n_qindex_factors(const ReflectionGroup& g, const Gr1nShape& shape);

/// Whether g is G(r,1,n) or cyclic (so the closed formulas apply).
bool is_gr1n(const ReflectionGroup& g);

/// Ratio s_W / s_{W_S} for the stratum. Uses Poincare polynomials for
/// Coxeter systems and the closed formula for G(r,1,n); throws Undecidable
/// otherwise.
SchurElement q_index(const ReflectionGroup& g, const StrataData& strata, int stratum, int bound = 60);

/// Iwahori-Hecke algebra of a Coxeter system in the T basis with
/// (T_s - 1)(T_s + q_s) = 0.
class HeckeAlgebra {
 public:
  using Element = std::vector<LaurentPoly>;  // coefficient of T_w at index w

  explicit HeckeAlgebra(const ReflectionGroup& g);

  const std::vector<std::string>& vars() const { return vars_; }
  Element zero() const;
  Element basis(int w) const;
  LaurentPoly q_of(int w) const;
  Element mul_generator_left(std::size_t s, const Element& a) const;
  Element multiply(const Element& a, const Element& b) const;
  LaurentPoly trace(const Element& a) const { return a[0]; }
  /// Sum of q_w^{-1} T_w.
  Element epsilon() const;
  /// Character T_w -> 1.
  LaurentPoly trivial_character(const Element& a) const;

 private:
  const ReflectionGroup& g_;
  std::vector<std::string> vars_;
  std::vector<Exponent> qexp_;
  std::vector<LaurentPoly> qs_;
};

/// Schur element of the trivial character computed from the Gram matrix of
/// the trace form (small groups only).
SchurElement schur_from_trace(const ReflectionGroup& g, int bound = 60);

}  // namespace cherednik
