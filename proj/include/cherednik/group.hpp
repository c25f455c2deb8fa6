#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cherednik/linalg.hpp"

namespace cherednik {

enum class GroupKind { Coxeter, Grpn, Cyclic };

struct GroupSpec {
  GroupKind kind = GroupKind::Cyclic;
  std::vector<std::vector<int>> coxeter;  // Coxeter matrix when kind == Coxeter
  int r = 2, p = 1, n = 1;                // G(r,p,n); cyclic uses n
  std::string name;
};

/// Accepts "a2", "b3", "d4", "f4", "h3", "h4", "i2:5", "e6".."e8",
/// "grpn:r,p,n", "cyclic:n", "coxeter:[[1,3],[3,1]]" or the JSON object form.
GroupSpec parse_group_spec(const std::string& text);
std::vector<std::vector<int>> coxeter_matrix_of(char type, int n);

struct Hyperplane {
  Vec alpha;                    // first nonzero entry 1
  Vec root;                     // spans the image of r - 1
  std::vector<int> stabilizer;  // sorted element indices, identity included
  int order = 0;                // n_H
  int rotation_generator = -1;  // element with det = exp(2 pi i / n_H)
  int orbit = -1;
};

struct HyperplaneOrbit {
  std::string label;
  std::vector<int> hyperplanes;
  int n_H = 0;
};

struct ParamCoord {
  std::string name;  // e.g. "x1"
  int orbit = 0;
  int j = 1;         // character det^j of W_H
};

class ReflectionGroup {
 public:
  static constexpr std::size_t kDefaultCap = 200000;

  static ReflectionGroup build(const GroupSpec& spec, std::size_t cap = kDefaultCap);
  static ReflectionGroup coxeter(const std::vector<std::vector<int>>& m, std::size_t cap = kDefaultCap);
  static ReflectionGroup grpn(int r, int p, int n, std::size_t cap = kDefaultCap);
  static ReflectionGroup cyclic(int n, std::size_t cap = kDefaultCap);
  /// Group generated by arbitrary invertible matrices over Q(zeta_field_order).
  static ReflectionGroup from_generators(std::vector<Mat> gens, int field_order, std::size_t cap = kDefaultCap);

  const GroupSpec& spec() const { return spec_; }
  bool is_coxeter() const { return spec_.kind == GroupKind::Coxeter; }
  /// True when the generators are involutive reflections forming a Coxeter
  /// system (Coxeter kind, G(r,p,n) with r <= 2, cyclic of order <= 2).
  bool has_coxeter_generators() const;
  /// Coxeter matrix of the generators (orders of pairwise products).
  std::vector<std::vector<int>> coxeter_matrix() const;
  /// Order of an element.
  int element_order(int w) const;
  std::size_t rank() const { return rank_; }
  int field_order() const { return field_order_; }
  std::size_t size() const { return perms_.size() / npoints_; }
  std::size_t num_generators() const { return gens_.size(); }
  const Mat& generator_matrix(std::size_t i) const { return gens_[i]; }
  int generator(std::size_t i) const { return gen_elements_[i]; }

  Mat matrix(int w) const;
  int multiply(int a, int b) const;
  int inverse(int w) const { return inverse_[w]; }
  int conjugate(int g, int x) const { return multiply(multiply(g, x), inverse(g)); }
  /// s * w for generator index s, from a precomputed table.
  int left_generator(std::size_t s, int w) const { return lmul_[s][w]; }
  /// BFS data over generators: word length, parent with w = gen(parent_letter) * parent.
  int length(int w) const { return length_[w]; }
  int parent(int w) const { return parent_[w]; }
  int parent_letter(int w) const { return letter_[w]; }
  std::vector<std::size_t> reduced_word(int w) const;  // generator indices, leftmost first
  /// Acting on orbit points: index of w applied to point i.
  int act_point(int w, int i) const { return perms_[static_cast<std::size_t>(w) * npoints_ + i]; }
  const std::vector<Vec>& points() const { return points_; }
  int find_element(const Mat& m) const;

  const std::vector<int>& reflections() const { return reflections_; }
  bool is_reflection(int w) const { return reflection_pos_[w] >= 0; }
  int hyperplane_of(int reflection) const { return refl_hyperplane_[reflection_pos_[reflection]]; }
  /// det of a reflection (its nontrivial eigenvalue).
  const CycloNum& reflection_eigenvalue(int reflection) const { return refl_eigen_[reflection_pos_[reflection]]; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const std::vector<HyperplaneOrbit>& orbits() const { return orbits_; }
  const std::vector<ParamCoord>& coords() const { return coords_; }
  int coord_index(const std::string& name) const;
  /// Generator i is a reflection in this orbit (-1 when not a reflection).
  int generator_orbit(std::size_t i) const;

  /// c_r for every reflection (in reflections() order) from c_{H,j} values.
  template <class S>
  std::vector<S> reflection_params(const std::vector<S>& coord_values) const;

  /// Hyperplane index of w(H).
  int act_hyperplane(int w, int h) const;

 private:
  void enumerate(std::size_t cap);
  void find_reflections();
  void find_orbits();

  GroupSpec spec_;
  std::size_t rank_ = 0;
  int field_order_ = 1;
  std::vector<Mat> gens_;
  std::vector<int> gen_elements_;
  std::vector<Vec> points_;
  std::size_t npoints_ = 0;
  std::vector<int> perms_;
  std::vector<int> inverse_;
  std::vector<int> length_, parent_, letter_;
  std::vector<std::vector<int>> lmul_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> reflections_;
  std::vector<int> reflection_pos_;
  std::vector<int> refl_hyperplane_;
  std::vector<CycloNum> refl_eigen_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<HyperplaneOrbit> orbits_;
  std::vector<ParamCoord> coords_;
};

template <class S>
std::vector<S> ReflectionGroup::reflection_params(const std::vector<S>& coord_values) const {
  if (coord_values.size() != coords_.size()) throw InvalidInput("wrong number of parameter coordinates");
  std::vector<S> out;
  out.reserve(reflections_.size());
  for (std::size_t k = 0; k < reflections_.size(); ++k) {
    const Hyperplane& h = hyperplanes_[refl_hyperplane_[k]];
    CycloNum inv = refl_eigen_[k].inv();
    S acc{};
    bool first = true;
    for (std::size_t c = 0; c < coords_.size(); ++c) {
      if (coords_[c].orbit != h.orbit) continue;
      S term = coord_values[c] * S(-inv.pow(coords_[c].j));
      if (first) acc = term;
      else acc = acc + term;
      first = false;
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace cherednik
