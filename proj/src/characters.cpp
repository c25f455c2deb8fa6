#include "cherednik/characters.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace cherednik {

ConjugacyClasses conjugacy_classes(const ReflectionGroup& g) {
  ConjugacyClasses out;
  out.class_of.assign(g.size(), -1);
  for (std::size_t w = 0; w < g.size(); ++w) {
    if (out.class_of[w] >= 0) continue;
    int id = static_cast<int>(out.classes.size());
    std::vector<int> cls = {static_cast<int>(w)};
    out.class_of[w] = id;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t s = 0; s < g.num_generators(); ++s) {
        int x = g.conjugate(g.generator(s), cls[i]);
        if (out.class_of[x] < 0) {
          out.class_of[x] = id;
          cls.push_back(x);
        }
      }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

namespace {

using cd = std::complex<double>;

// class sum i acting on the class-sum basis: (L_i)[k][j] = #{x in C_i : x^-1 z_k in C_j}
std::vector<Eigen::MatrixXd> class_matrices(const ReflectionGroup& g, const ConjugacyClasses& cc) {
  std::size_t k = cc.classes.size();
  std::vector<Eigen::MatrixXd> out(k, Eigen::MatrixXd::Zero(k, k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < k; ++c) {
      int z = cc.classes[c][0];
      for (int x : cc.classes[i]) out[i](c, cc.class_of[g.multiply(g.inverse(x), z)]) += 1.0;
    }
  return out;
}

// exact character value at g from numeric values on the powers of g
std::optional<CycloNum> rationalize(const ReflectionGroup& g, const ConjugacyClasses& cc, const std::vector<cd>& chi,
                                    int w, int dim) {
  int e = g.element_order(w);
  std::vector<cd> powers(e);
  int x = 0;
  for (int k = 0; k < e; ++k) {
    powers[k] = chi[cc.class_of[x]];
    x = g.multiply(x, w);
  }
  CycloNum value(0);
  long total = 0;
  for (int j = 0; j < e; ++j) {
    cd m = 0;
    for (int k = 0; k < e; ++k) m += powers[k] * std::polar(1.0, -2.0 * M_PI * j * k / e);
    m /= static_cast<double>(e);
    double r = std::round(m.real());
    if (std::abs(m - cd(r, 0)) > 1e-6 || r < 0) return std::nullopt;
    long mult = static_cast<long>(r);
    total += mult;
    if (mult) value += CycloNum::zeta(e, j) * CycloNum(mult);
  }
  if (total != dim) return std::nullopt;
  return value.reduced();
}

}  // namespace

CharacterData compute_characters(const ReflectionGroup& g, std::uint64_t seed, double tol, std::size_t max_order) {
  if (g.size() > max_order)
    throw InvalidInput("group order " + std::to_string(g.size()) + " exceeds the character bound " +
                       std::to_string(max_order));
  CharacterData data;
  data.classes_ = conjugacy_classes(g);
  const auto& cc = data.classes_;
  std::size_t k = cc.classes.size();
  auto mats = class_matrices(g, cc);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(1, 1000);

  Eigen::MatrixXcd vecs;
  bool separated = false;
  for (int attempt = 0; attempt < 10 && !separated; ++attempt) {
    Eigen::MatrixXd comb = Eigen::MatrixXd::Zero(k, k);
    for (std::size_t i = 0; i < k; ++i) comb += coef(rng) * mats[i];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comb);
    if (es.info() != Eigen::Success) continue;
    auto vals = es.eigenvalues();
    double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
    separated = true;
    for (std::size_t a = 0; a < k && separated; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (std::abs(vals[a] - vals[b]) < 10 * tol * scale) {
          separated = false;
          break;
        }
    vecs = es.eigenvectors();
  }
  if (!separated) throw InternalError("class algebra eigenvalues stay clustered; rerun with another seed");

  double order = static_cast<double>(g.size());
  for (std::size_t v = 0; v < k; ++v) {
    Eigen::VectorXcd vec = vecs.col(v);
    Eigen::Index piv;
    vec.cwiseAbs().maxCoeff(&piv);
    // central character omega(C_i) = |C_i| chi(g_i) / chi(1)
    std::vector<cd> omega(k);
    for (std::size_t i = 0; i < k; ++i) omega[i] = (mats[i].cast<cd>() * vec)(piv) / vec(piv);
    double norm = 0;
    for (std::size_t i = 0; i < k; ++i) norm += std::norm(omega[i]) / static_cast<double>(cc.classes[i].size());
    Irrep ir;
    ir.dim = static_cast<int>(std::lround(std::sqrt(order / norm)));
    for (std::size_t i = 0; i < k; ++i)
      ir.numeric.push_back(static_cast<double>(ir.dim) * omega[i] / static_cast<double>(cc.classes[i].size()));
    data.irreps_.push_back(std::move(ir));
  }

  auto key = [](const Irrep& a) {
    std::vector<double> out = {static_cast<double>(a.dim)};
    for (const auto& z : a.numeric) {
      out.push_back(std::round(z.real() * 1e6) / 1e6);
      out.push_back(std::round(z.imag() * 1e6) / 1e6);
    }
    return out;
  };
  auto is_trivial = [](const Irrep& a) {
    return std::all_of(a.numeric.begin(), a.numeric.end(), [](cd z) { return std::abs(z - cd(1, 0)) < 1e-6; });
  };
  std::sort(data.irreps_.begin(), data.irreps_.end(), [&](const Irrep& a, const Irrep& b) {
    if (is_trivial(a) != is_trivial(b)) return is_trivial(a);
    return key(a) < key(b);
  });

  data.exact_ = true;
  for (auto& ir : data.irreps_) {
    for (std::size_t i = 0; i < k && data.exact_; ++i) {
      auto v = rationalize(g, cc, ir.numeric, cc.classes[i][0], ir.dim);
      if (!v) data.exact_ = false;
      else ir.values.push_back(*v);
    }
  }
  if (data.exact_) {
    long sum_sq = 0;
    for (const auto& ir : data.irreps_) sum_sq += static_cast<long>(ir.dim) * ir.dim;
    if (sum_sq != static_cast<long>(g.size())) data.exact_ = false;
    for (std::size_t a = 0; a < k && data.exact_; ++a)
      for (std::size_t b = a; b < k && data.exact_; ++b) {
        CycloNum s(0);
        for (std::size_t i = 0; i < k; ++i)
          s += CycloNum(static_cast<long>(cc.classes[i].size())) * data.irreps_[a].values[i] *
               data.irreps_[b].values[i].conj();
        if (s != CycloNum(a == b ? static_cast<long>(g.size()) : 0L)) data.exact_ = false;
      }
  }
  if (!data.exact_)
    for (auto& ir : data.irreps_) ir.values.clear();
  return data;
}

std::vector<CycloNum> CharacterData::projector(std::size_t irrep) const {
  if (!exact_) throw InternalError("character values were not rationalized");
  const Irrep& ir = irreps_[irrep];
  std::vector<CycloNum> out(classes_.class_of.size());
  CycloNum scale = CycloNum(make_rational(ir.dim, static_cast<long>(out.size())));
  std::vector<CycloNum> per_class;
  for (const auto& v : ir.values) per_class.push_back(scale * v.conj());
  for (std::size_t w = 0; w < out.size(); ++w) out[w] = per_class[classes_.class_of[w]];
  return out;
}

int CharacterData::find_power_of_det(const ReflectionGroup& g, int k) const {
  if (!exact_) return -1;
  for (std::size_t f = 0; f < irreps_.size(); ++f) {
    if (irreps_[f].dim != 1) continue;
    bool ok = true;
    for (std::size_t c = 0; c < classes_.classes.size() && ok; ++c) {
      int w = classes_.classes[c][0];
      CycloNum d = bareiss_det(g.matrix(w), CycloNum(0), CycloNum(1));
      if (d.pow(k) != irreps_[f].values[c]) ok = false;
    }
    if (ok) return static_cast<int>(f);
  }
  return -1;
}

CycloNum CFunction::eval(const std::vector<CycloNum>& coord_values) const {
  CycloNum s(0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * coord_values[i];
  return s;
}

CFunction c_function(const ReflectionGroup& g, const CharacterData& chars, std::size_t irrep) {
  if (!chars.exact()) throw InternalError("c-function needs exact character values");
  CFunction f;
  f.irrep = irrep;
  f.coeffs.assign(g.coords().size(), CycloNum(0));
  CycloNum dim(static_cast<long>(chars.irreps()[irrep].dim));
  const auto& refl = g.reflections();
  for (std::size_t c = 0; c < g.coords().size(); ++c) {
    std::vector<CycloNum> unit(g.coords().size(), CycloNum(0));
    unit[c] = CycloNum(1);
    auto cr = g.reflection_params(unit);
    for (std::size_t k = 0; k < refl.size(); ++k)
      if (!cr[k].is_zero()) f.coeffs[c] += cr[k] * (CycloNum(1) - chars.value(irrep, refl[k]) / dim);
    f.coeffs[c] = f.coeffs[c].reduced();
  }
  return f;
}

}  // namespace cherednik
