#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "conj/poly.hpp"

namespace conjprod {

/// Dense row-major matrix over an exact field.
template <FieldElement T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), a_(rows * cols, zero) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> a_;
};

/// Reduces m in place to reduced row echelon form; returns the pivot columns.
template <FieldElement T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    }
    const T inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(i, j) = m(i, j) - f * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <FieldElement T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// A basis of {v : m v = 0}.
template <FieldElement T>
std::vector<std::vector<T>> nullspace(Matrix<T> m, const T& like) {
  const std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), like.zero_like());
    v[free] = like.one_like();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// The unique solution of m x = b, if m is square and nonsingular, or any
/// solution otherwise; nullopt when the system is inconsistent.
template <FieldElement T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b,
                                    const T& like) {
  Matrix<T> aug(m.rows(), m.cols() + 1, like.zero_like());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols(), like.zero_like());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

}  // namespace conjprod
