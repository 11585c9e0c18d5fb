#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permfft/numeric.hpp"

namespace permfft {

/// Small row-major dense matrix for representation matrices and the
/// multiplicity-space problems solved during basis construction.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  DenseMatrix operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_) throw std::domain_error("dense multiply: shape mismatch");
    DenseMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (ScalarTraits<T>::is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
      }
    }
    return out;
  }

  DenseMatrix transpose() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref(DenseMatrix<T>& m) {
  using Tr = ScalarTraits<T>;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t best = m.rows();
    for (std::size_t r = lead; r < m.rows(); ++r) {
      if (Tr::is_zero(m(r, c))) continue;
      if constexpr (Tr::exact) {
        best = r;
        break;
      } else {
        if (best == m.rows() || Tr::magnitude(m(r, c)) > Tr::magnitude(m(best, c))) best = r;
      }
    }
    if (best == m.rows()) {
      for (std::size_t r = lead; r < m.rows(); ++r) m(r, c) = T(0);
      continue;
    }
    if (best != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(lead, j));
    const T inv = T(1) / m(lead, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) *= inv;
    m(lead, c) = T(1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || Tr::is_zero(m(r, c))) continue;
      const T factor = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= factor * m(lead, j);
      m(r, c) = T(0);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

/// Basis of the null space, one vector per free column.
template <class T>
std::vector<std::vector<T>> kernel(DenseMatrix<T> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Reduced echelon basis of span(vectors): each vector has a leading 1 and
/// leading positions increase. This is a canonical basis of the span.
template <class T>
std::vector<std::vector<T>> echelon_basis(const std::vector<std::vector<T>>& vectors) {
  if (vectors.empty()) return {};
  DenseMatrix<T> m(vectors.size(), vectors.front().size());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vectors[i][j];
  const auto pivots = rref(m);
  std::vector<std::vector<T>> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row(i));
  return out;
}

/// Inverse by Gauss-Jordan elimination; throws std::runtime_error if singular.
template <class T>
DenseMatrix<T> inverse(const DenseMatrix<T>& a) {
  if (a.rows() != a.cols()) throw std::domain_error("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  DenseMatrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::runtime_error("singular matrix");
  DenseMatrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

}  // namespace permfft
