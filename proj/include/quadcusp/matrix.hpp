#pragma once

// Dense row-major matrices over a Field with exact Gaussian elimination.

#include <cstddef>
#include <utility>
#include <vector>

#include "quadcusp/field.hpp"

namespace quadcusp {

template <class E>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<E> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const E& fill) : rows(r), cols(c), a(r * c, fill) {}

  E& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

template <Field K>
Matrix<elem_t<K>> zero_matrix(const K& k, std::size_t r, std::size_t c) {
  return Matrix<elem_t<K>>(r, c, k.zero());
}

/// In-place reduced row echelon form; returns the pivot columns.
template <Field K>
std::vector<std::size_t> rref(const K& k, Matrix<elem_t<K>>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && k.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    auto li = k.inv(m(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m(r, j) = k.mul(m(r, j), li);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || k.is_zero(m(i, c))) continue;
      auto f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <Field K>
std::size_t rank(const K& k, Matrix<elem_t<K>> m) {
  return rref(k, m).size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <Field K>
std::vector<std::vector<elem_t<K>>> kernel(const K& k, Matrix<elem_t<K>> m) {
  auto pivots = rref(k, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<elem_t<K>>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<elem_t<K>> v(m.cols, k.zero());
    v[f] = k.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(m(i, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field K>
std::vector<elem_t<K>> apply(const K& k, const Matrix<elem_t<K>>& m, const std::vector<elem_t<K>>& x) {
  std::vector<elem_t<K>> y(m.rows, k.zero());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!k.is_zero(x[j])) y[i] = k.add(y[i], k.mul(m(i, j), x[j]));
  return y;
}

}  // namespace quadcusp
