#pragma once

#include <cstddef>
#include <vector>

#include "hyperdef/scalar.hpp"

namespace hyperdef {

template <class S>
using Vec = std::vector<S>;
template <class S>
using Mat = std::vector<std::vector<S>>;

// Reduced row echelon form over an exact field. Rows that are zero are
// skipped cheaply, which matters for the sparse tangent systems.
template <class S>
struct Echelon {
  Mat<S> rows;              // nonzero rows, pivot entries normalised to 1
  std::vector<size_t> pivots;
};

template <class S>
Echelon<S> echelon(Mat<S> m, size_t ncols) {
  Echelon<S> e;
  size_t r = 0;
  for (size_t col = 0; col < ncols && r < m.size(); ++col) {
    size_t piv = m.size();
    for (size_t i = r; i < m.size(); ++i)
      if (!is_zero(m[i][col])) {
        piv = i;
        break;
      }
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    S inv = S(1) / m[r][col];
    std::vector<size_t> nz;
    for (size_t j = col; j < ncols; ++j)
      if (!is_zero(m[r][j])) {
        m[r][j] = m[r][j] * inv;
        nz.push_back(j);
      }
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || is_zero(m[i][col])) continue;
      S f = m[i][col];
      for (size_t j : nz) m[i][j] = m[i][j] - f * m[r][j];
    }
    e.pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

template <class S>
size_t matrix_rank(const Mat<S>& m, size_t ncols) {
  return echelon(m, ncols).pivots.size();
}

template <class S>
std::vector<Vec<S>> kernel_basis(const Mat<S>& m, size_t ncols) {
  Echelon<S> e = echelon(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<S>> basis;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vec<S> v(ncols, S(0));
    v[f] = S(1);
    for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
S determinant(Mat<S> m) {
  size_t n = m.size();
  S det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t i = c; i < n; ++i)
      if (!is_zero(m[i][c])) {
        piv = i;
        break;
      }
    if (piv == n) return S(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    S inv = S(1) / m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      S f = m[i][c] * inv;
      for (size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return det;
}

}  // namespace hyperdef
