#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permfft/numeric.hpp"

namespace permfft {

/// Arithmetic operations spent applying matrices to a vector.
struct OpCount {
  std::uint64_t multiplications = 0;
  std::uint64_t additions = 0;

  std::uint64_t total() const { return multiplications + additions; }
  OpCount& operator+=(const OpCount& o) {
    multiplications += o.multiplications;
    additions += o.additions;
    return *this;
  }
};

template <class T>
struct Triplet {
  std::size_t row;
  std::size_t col;
  T value;
};

/// Compressed-row sparse matrix. Explicit zeros are never stored, so nnz() is
/// the nonzero count of the represented matrix.
template <class T>
class SparseMatrix {
 public:
  SparseMatrix() = default;

  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet<T>> triplets)
      : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {
    std::sort(triplets.begin(), triplets.end(), [](const Triplet<T>& a, const Triplet<T>& b) {
      return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (std::size_t i = 0; i < triplets.size(); ++i) {
      const auto& t = triplets[i];
      if (t.row >= rows || t.col >= cols) throw std::out_of_range("sparse entry out of range");
      if (i > 0 && triplets[i - 1].row == t.row && triplets[i - 1].col == t.col) {
        throw std::invalid_argument("duplicate sparse entry");
      }
      if (ScalarTraits<T>::is_zero(t.value)) continue;
      ++row_ptr_[t.row + 1];
      col_idx_.push_back(t.col);
      values_.push_back(std::move(triplets[i].value));
    }
    for (std::size_t r = 0; r < rows; ++r) row_ptr_[r + 1] += row_ptr_[r];
  }

  static SparseMatrix identity(std::size_t n) {
    std::vector<Triplet<T>> t;
    t.reserve(n);
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, T(1)});
    return SparseMatrix(n, n, std::move(t));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return values_.size(); }

  std::span<const std::size_t> row_columns(std::size_t r) const {
    return {col_idx_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }
  std::span<const T> row_values(std::size_t r) const {
    return {values_.data() + row_ptr_[r], row_ptr_[r + 1] - row_ptr_[r]};
  }

  T at(std::size_t r, std::size_t c) const {
    auto cols = row_columns(r);
    auto it = std::lower_bound(cols.begin(), cols.end(), c);
    if (it == cols.end() || *it != c) return T(0);
    return values_[row_ptr_[r] + static_cast<std::size_t>(it - cols.begin())];
  }

  std::vector<Triplet<T>> triplets() const {
    std::vector<Triplet<T>> out;
    out.reserve(nnz());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
        out.push_back({r, col_idx_[p], values_[p]});
      }
    }
    return out;
  }

  std::vector<std::size_t> column_counts() const {
    std::vector<std::size_t> counts(cols_, 0);
    for (std::size_t c : col_idx_) ++counts[c];
    return counts;
  }

  std::size_t max_column_count() const {
    auto counts = column_counts();
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  }

  SparseMatrix transpose() const {
    std::vector<Triplet<T>> t;
    t.reserve(nnz());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
        t.push_back({col_idx_[p], r, values_[p]});
      }
    }
    return SparseMatrix(cols_, rows_, std::move(t));
  }

  template <class U, class Convert>
  SparseMatrix<U> map(Convert convert) const {
    std::vector<Triplet<U>> t;
    t.reserve(nnz());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
        t.push_back({r, col_idx_[p], convert(values_[p])});
      }
    }
    return SparseMatrix<U>(rows_, cols_, std::move(t));
  }

  /// y = A x. Counts one multiplication per stored entry and one addition
  /// per accumulation after the first into each output slot.
  template <class V>
  std::vector<V> multiply(std::span<const V> x, OpCount* ops = nullptr) const {
    if (x.size() != cols_) throw std::domain_error("sparse multiply: length mismatch");
    std::vector<V> y(rows_, V(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::size_t begin = row_ptr_[r];
      const std::size_t end = row_ptr_[r + 1];
      if (begin == end) continue;
      V acc = values_[begin] * x[col_idx_[begin]];
      for (std::size_t p = begin + 1; p < end; ++p) acc += values_[p] * x[col_idx_[p]];
      y[r] = acc;
      if (ops) {
        ops->multiplications += end - begin;
        ops->additions += end - begin - 1;
      }
    }
    return y;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ptr_ == b.row_ptr_ &&
           a.col_idx_ == b.col_idx_ && a.values_ == b.values_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> col_idx_;
  std::vector<T> values_;
};

/// Change-of-basis factor with exact entries.
using SparseFactor = SparseMatrix<Rational>;

}  // namespace permfft
