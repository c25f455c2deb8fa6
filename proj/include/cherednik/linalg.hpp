#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cherednik/cyclo.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/laurent.hpp"

namespace cherednik {

using Vec = std::vector<CycloNum>;
using Mat = std::vector<Vec>;  // row major

template <class S>
using Matrix = std::vector<std::vector<S>>;

inline bool scalar_is_zero(const CycloNum& a) { return a.is_zero(); }
inline bool scalar_is_zero(const LaurentPoly& a) { return a.is_zero(); }

inline LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw InternalError("inexact division in fraction-free elimination");
  return *q;
}
inline CycloNum exact_quotient(const CycloNum& a, const CycloNum& b) { return a / b; }

Mat identity_matrix(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& v);
Vec vec_mat(const Vec& v, const Mat& a);  // row vector times matrix
Mat transpose(const Mat& a);
CycloNum dot(const Vec& a, const Vec& b);

/// Reduced row echelon form over Q(zeta); returns pivot columns.
std::vector<std::size_t> rref(Mat& m);
std::size_t rank(Mat m);
/// Basis of {v : m v = 0}.
Mat nullspace(Mat m);
/// Is v in the row space of the rows of basis (already in rref with pivots)?
bool in_rowspace(const Mat& rref_rows, const std::vector<std::size_t>& pivots, const Vec& v);

struct SolveResult {
  bool consistent = false;
  bool singular = false;
  Vec solution;  // a particular solution when consistent
};
/// Solves m x = b over the field; reports singularity and consistency.
SolveResult solve_linear(Mat m, Vec b);

/// Fraction-free Gauss-Jordan elimination on [m | b] over an integral domain
/// with exact division. Returns (det, adj(m) b); det is zero when m is singular.
template <class S>
std::pair<S, std::vector<S>> bareiss_solve(Matrix<S> m, std::vector<S> b, const S& zero, const S& one) {
  std::size_t n = m.size();
  if (n == 0) return {one, {}};
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
  S prev = one;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && scalar_is_zero(m[piv][k])) ++piv;
    if (piv == n) return {zero, std::vector<S>(n, zero)};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == k) continue;
        S t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = scalar_is_zero(t) ? zero : exact_quotient(t, prev);
      }
      m[i][k] = zero;
    }
    prev = m[k][k];
  }
  // after Gauss-Jordan every diagonal entry equals the determinant up to the row-swap sign
  S det = m[n - 1][n - 1];
  std::vector<S> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  if (sign < 0) {
    det = zero - det;
    for (auto& v : x) v = zero - v;
  }
  return {det, x};
}

template <class S>
S bareiss_det(Matrix<S> m, const S& zero, const S& one) {
  std::size_t n = m.size();
  if (n == 0) return one;
  S prev = one;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && scalar_is_zero(m[piv][k])) ++piv;
    if (piv == n) return zero;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        S t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = scalar_is_zero(t) ? zero : exact_quotient(t, prev);
      }
    }
    prev = m[k][k];
  }
  S det = m[n - 1][n - 1];
  return sign < 0 ? zero - det : det;
}

}  // namespace cherednik
