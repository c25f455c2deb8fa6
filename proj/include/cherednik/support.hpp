#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/dunkl.hpp"
#include "cherednik/schur_table.hpp"

namespace cherednik {

/// Rational values of the coordinates c_{H,j}, one per ReflectionGroup::coords().
struct ParamPoint {
  std::vector<std::string> names;
  std::vector<Rational> values;

  /// lcm of the denominators.
  long order() const;
  std::vector<CycloNum> cyclo() const;
  /// q = exp(2 pi i c) for each coordinate.
  std::vector<CycloNum> q_values() const;
};

/// Keys may be "x1" or "x.1"; unlisted coordinates are 0.
ParamPoint param_point(const ReflectionGroup& g, const std::map<std::string, Rational>& values);
ParamPoint param_point_uniform(const ReflectionGroup& g, const Rational& c);

/// Native G(r,1,n) parameters: q = exp(-2 pi i c0), Q_j = exp(2 pi i (j - d_j)/r).
struct Gr1nParams {
  Rational c0;
  std::vector<Rational> d;  // d_0 .. d_{r-1}
};
/// Transposition orbit gets c0, the diagonal coordinate j gets (d_0 - d_j)/r.
ParamPoint param_point_gr1n(const ReflectionGroup& g, const Gr1nParams& p);

/// sum a_i c_i == theta (mod 1), the zero set of (x^a - exp(2 pi i theta)).
struct VanishingCondition {
  Exponent a;
  Rational theta;
};

enum class Positivity { Positive, NotPositive, Indeterminate };
std::string to_string(Positivity p);

struct Witness {
  VanishingCondition condition;
  Rational value;  // sum a_i c_i at the point
  Positivity positivity = Positivity::NotPositive;
};

struct StratumVerdict {
  int stratum = 0;
  bool in_support = true;
  bool certified = true;  // false for "not excluded up to degree D"
  SchurSource source = SchurSource::Poincare;
  std::vector<Witness> witnesses;  // vanishing factors of the q-index
};

struct SupportResult {
  std::vector<StratumVerdict> strata;  // indexed like StrataData::strata
  bool finite_dimensional = false;
  std::vector<std::string> warnings;
};

/// Classifies the hyperplane sum a c' = value.
Positivity positivity(const Exponent& a, const Rational& value);

/// The q-index of a stratum: computed when possible, else taken from the table.
SchurElement stratum_qindex(const ReflectionGroup& g, const StrataData& strata, int stratum,
                            const SchurTable* table, int bound = 60);

/// The vanishing factors of a factor list at the point.
std::vector<Witness> vanishing_witnesses(const std::vector<CycloFactor>& factors, const ParamPoint& c);

/// q-indices of every stratum (index 1 for the origin).
std::vector<SchurElement> all_qindices(const ReflectionGroup& g, const StrataData& strata,
                                       const SchurTable* table = nullptr, int bound = 60);
SupportResult support_from_qindices(const StrataData& strata, const std::vector<SchurElement>& qindices,
                                    const ParamPoint& c);

SupportResult support_via_schur(const ReflectionGroup& g, const StrataData& strata, const ParamPoint& c,
                                const SchurTable* table = nullptr, int bound = 60);

bool finite_dimensional(const ReflectionGroup& g, const StrataData& strata, const ParamPoint& c,
                        const SchurTable* table = nullptr, int bound = 60);

/// Closed-form criterion for G(r,1,n), r >= 2.
bool gr1n_finite_dim_criterion(int r, int n, const Gr1nParams& p);

/// A covector whose stabilizer is exactly W_S, via the invariant Hermitian form
/// applied to a random point of the flat. Throws InternalError after 20 misses.
Vec choose_lambda(const ReflectionGroup& g, const Stratum& s, std::uint64_t seed);

/// Certified exclusions from poles of e_lambda up to degree D. Strata that are
/// not excluded come back with certified = false.
SupportResult support_via_exponential(const ReflectionGroup& g, const StrataData& strata, const ParamPoint& c, int D,
                                      std::uint64_t seed = 0);

}  // namespace cherednik
