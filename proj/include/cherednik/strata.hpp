#pragma once

#include <string>
#include <vector>

#include "cherednik/group.hpp"

namespace cherednik {

struct Stratum {
  std::string id;                // "S0", "S1", ... in order of increasing codimension
  Mat flat_basis;                // rows span the flat (the whole space for the open stratum)
  std::vector<int> hyperplanes;  // sorted ids of hyperplanes containing the flat
  std::vector<int> parabolic;    // sorted element indices of W_S
  std::vector<int> reflections;  // reflections in W_S
  std::size_t codim = 0;
  std::size_t orbit_size = 0;    // number of flats in the W-orbit
  std::vector<int> standard_subset;  // Coxeter groups: generator indices J with W_J conjugate to W_S
  std::string type;                  // e.g. "A1^2", "H2"; empty when unknown
};

struct StrataData {
  std::vector<Stratum> strata;  // one representative per orbit
  /// leq[a][b]: stratum a lies in the closure of stratum b.
  std::vector<std::vector<bool>> leq;
  int open_index = 0;
  int origin_index = 0;

  int find(const std::string& id) const;
};

StrataData compute_strata(const ReflectionGroup& g);

/// Subgroup generated by the given elements (sorted indices).
std::vector<int> generated_subgroup(const ReflectionGroup& g, const std::vector<int>& gens);

/// Coxeter type name of the standard parabolic W_J ("1" for J empty).
std::string coxeter_type_name(const std::vector<std::vector<int>>& m, const std::vector<int>& subset);

}  // namespace cherednik
