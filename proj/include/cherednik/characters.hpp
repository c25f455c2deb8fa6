#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cherednik/group.hpp"

namespace cherednik {

struct ConjugacyClasses {
  std::vector<std::vector<int>> classes;  // sorted element indices; class 0 is {identity}
  std::vector<int> class_of;
};

ConjugacyClasses conjugacy_classes(const ReflectionGroup& g);

struct Irrep {
  int dim = 0;
  std::vector<std::complex<double>> numeric;  // per class
  std::vector<CycloNum> values;               // per class, filled when exact
};

/// Irreducible characters. Irrep 0 is the trivial one; the rest are sorted by
/// dimension and then by their numeric values.
class CharacterData {
 public:
  const ConjugacyClasses& classes() const { return classes_; }
  const std::vector<Irrep>& irreps() const { return irreps_; }
  std::size_t size() const { return irreps_.size(); }
  /// All values rationalized and exact orthogonality verified.
  bool exact() const { return exact_; }

  const CycloNum& value(std::size_t irrep, int w) const { return irreps_[irrep].values[classes_.class_of[w]]; }
  /// Central idempotent e_F = dim/|W| sum conj(chi(w)) w, as coefficients per element.
  std::vector<CycloNum> projector(std::size_t irrep) const;
  /// Irrep whose character is det (or det^k when k given) of the reflection representation.
  int find_power_of_det(const ReflectionGroup& g, int k = 1) const;

 private:
  friend CharacterData compute_characters(const ReflectionGroup&, std::uint64_t, double, std::size_t);
  ConjugacyClasses classes_;
  std::vector<Irrep> irreps_;
  bool exact_ = false;
};

/// Burnside's method: common eigenvectors of the class-sum multiplication
/// matrices, found from a random combination with numeric eigen solving,
/// then made exact from eigenvalue multiplicities on cyclic subgroups.
/// Throws InvalidInput above max_order and InternalError when eigenvalues stay
/// clustered after retries.
CharacterData compute_characters(const ReflectionGroup& g, std::uint64_t seed = 0, double tol = 1e-9,
                                 std::size_t max_order = 1500);

/// sum over w of coeffs[w] * rho(w) for a matrix representation rho.
template <class Rho>
Mat group_algebra_action(const std::vector<CycloNum>& coeffs, Rho&& rho, std::size_t dim) {
  Mat out(dim, Vec(dim, CycloNum(0)));
  for (std::size_t w = 0; w < coeffs.size(); ++w) {
    if (coeffs[w].is_zero()) continue;
    Mat m = rho(static_cast<int>(w));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (!m[i][j].is_zero()) out[i][j] += coeffs[w] * m[i][j];
  }
  return out;
}

/// c_E as a linear form in the parameter coordinates: c_E = sum_r c_r (1 - chi(r)/chi(1)).
struct CFunction {
  std::size_t irrep = 0;
  std::vector<CycloNum> coeffs;  // one per ReflectionGroup::coords() entry

  CycloNum eval(const std::vector<CycloNum>& coord_values) const;
};

CFunction c_function(const ReflectionGroup& g, const CharacterData& chars, std::size_t irrep);

}  // namespace cherednik
