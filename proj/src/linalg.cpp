#include "cherednik/linalg.hpp"

namespace cherednik {

Mat identity_matrix(std::size_t n) {
  Mat m(n, Vec(n, CycloNum(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = CycloNum(1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Mat c(n, Vec(p, CycloNum(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < p; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Vec mat_vec(const Mat& a, const Vec& v) {
  Vec out(a.size(), CycloNum(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
  return out;
}

Vec vec_mat(const Vec& v, const Mat& a) {
  std::size_t p = a.empty() ? 0 : a[0].size();
  Vec out(p, CycloNum(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < p; ++j)
      if (!a[i][j].is_zero()) out[j] += v[i] * a[i][j];
  }
  return out;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t(a[0].size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

CycloNum dot(const Vec& a, const Vec& b) {
  CycloNum s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    CycloNum inv = m[r][c].inv();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      CycloNum f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }

Mat nullspace(Mat m) {
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  auto piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (auto p : piv) is_piv[p] = true;
  Mat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols, CycloNum(0));
    v[f] = CycloNum(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_rowspace(const Mat& rows, const std::vector<std::size_t>& pivots, const Vec& v) {
  Vec w = v;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const CycloNum f = w[pivots[r]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (!rows[r][j].is_zero()) w[j] -= f * rows[r][j];
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

SolveResult solve_linear(Mat m, Vec b) {
  std::size_t n = m.size();
  std::size_t cols = n ? m[0].size() : 0;
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
  auto piv = rref(m);
  SolveResult res;
  res.singular = piv.size() < cols || (piv.size() == cols && n < cols);
  for (auto p : piv)
    if (p == cols) {
      res.singular = true;
      res.consistent = false;
      return res;
    }
  res.consistent = true;
  res.solution.assign(cols, CycloNum(0));
  for (std::size_t r = 0; r < piv.size(); ++r) res.solution[piv[r]] = m[r][cols];
  return res;
}

}  // namespace cherednik
