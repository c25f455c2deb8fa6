#pragma once

#include <string>
#include <vector>

#include "cherednik/laurent.hpp"

namespace cherednik {

/// The factor (x^monomial - root)^multiplicity.
struct CycloFactor {
  Exponent monomial;
  CycloNum root;
  int multiplicity = 1;
};

/// Angles k/n (in [0,1)) of the roots of a Phi label such as "Phi12'''".
/// Accepts "Phi<n>" followed by up to four primes; throws InvalidInput on
/// labels outside the supported set.
std::vector<Rational> phi_label_roots(const std::string& label);

/// Polynomial in one variable (named var) for a Phi label.
LaurentPoly phi_poly(const std::string& label, const std::string& var = "q");

/// (x^monomial - root) over vars.
LaurentPoly factor_poly(const CycloFactor& f, const std::vector<std::string>& vars);

struct Factorization {
  std::vector<std::string> vars;
  Exponent unit_monomial;
  CycloNum unit_scalar{1};
  std::vector<CycloFactor> factors;  // monomials primitive, first nonzero exponent positive
  LaurentPoly remainder;

  LaurentPoly expand() const;
  /// Product of the factors only (no unit, no remainder).
  LaurentPoly product() const;
};

/// Splits off every factor (m - zeta) with zeta a root of unity of order at
/// most bound and m a primitive monomial. Exact: expand() == p.
Factorization factor_unity_roots(const LaurentPoly& p, int bound = 60);

/// Rewrites (m - zeta) up to a unit so the first nonzero exponent of m is
/// positive.
CycloFactor orient_factor(const CycloFactor& f);

/// Sorted, merged factor list; equal lists mean equal up to unit.
std::vector<CycloFactor> canonical_factors(std::vector<CycloFactor> fs);
bool same_factors(const std::vector<CycloFactor>& a, const std::vector<CycloFactor>& b);

/// One monomial's factors grouped into labels, e.g. {"Phi2^2","Phi4"} at x1*y1.
struct LabelGroup {
  Exponent monomial;
  std::vector<std::string> labels;
};

/// Groups factors per monomial into Phi labels. Roots not covered by a known
/// label print as Psi<n>_<k> meaning (m - zeta_n^k).
std::vector<LabelGroup> group_labels(const std::vector<CycloFactor>& factors);

/// Inverse of group_labels.
std::vector<CycloFactor> ungroup_labels(const std::vector<LabelGroup>& groups);

/// "Phi2^3 Phi3 Phi5 Phi6 Phi10(x1) Phi2(x1*y1)"; "1" for no factors.
std::string format_groups(const std::vector<LabelGroup>& groups, const std::vector<std::string>& vars);
std::vector<LabelGroup> parse_groups(const std::string& text, const std::vector<std::string>& vars);

}  // namespace cherednik
