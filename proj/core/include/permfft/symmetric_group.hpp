#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permfft/combinatorics.hpp"
#include "permfft/linalg.hpp"
#include "permfft/numeric.hpp"
#include "permfft/sparse.hpp"

namespace permfft {

class TabloidSpace;

/// Permutation of {1,...,n}; images()[i-1] holds sigma(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  /// s_i = (i, i+1).
  static Permutation adjacent(int n, int i);
  /// Product of disjoint or overlapping cycles, rightmost applied first.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return images_; }

  /// Composition: (a * b)(i) = a(b(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;

  /// Indices w with sigma = s_{w[0]} s_{w[1]} ... of minimal length.
  std::vector<int> reduced_word() const;
  /// Cycle lengths, descending.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Standard Young tableau stored as its row word: row_word()[p-1] is the
/// 0-based row holding letter p.
class StandardTableau {
 public:
  StandardTableau() = default;
  /// Throws std::invalid_argument if the word is not standard for `shape`.
  StandardTableau(Partition shape, std::vector<int> row_word);

  const Partition& shape() const { return shape_; }
  const std::vector<int>& row_word() const { return rows_; }
  int n() const { return static_cast<int>(rows_.size()); }
  int row_of(int letter) const { return rows_.at(static_cast<std::size_t>(letter - 1)); }
  int column_of(int letter) const;
  /// column - row of the box holding `letter`.
  int content(int letter) const { return column_of(letter) - row_of(letter); }

  /// The tableau with the largest letter removed.
  StandardTableau restricted() const;
  /// Shapes of T|1, T|2, ..., T.
  std::vector<Partition> chain() const;
  /// Rows of the tableau as lists of letters.
  std::vector<std::vector<int>> rows() const;
  std::string to_string() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  Partition shape_;
  std::vector<int> rows_;
};

/// All standard tableaux of shape mu in last-letter order: the position of n
/// is compared first (upper row first), then n-1, and so on. Cached and
/// safe to call concurrently.
const std::vector<StandardTableau>& standard_tableaux(const Partition& mu);

/// Position of the tableau with the given row word in standard_tableaux(mu).
std::size_t tableau_index(const Partition& mu, const std::vector<int>& row_word);

/// Young's seminormal matrix of s_i on S^mu, rows/columns in last-letter
/// order. For T before s_i T with axial distance d = c(i+1) - c(i): diagonal
/// 1/d, entry (s_i T, T) = 1 and entry (T, s_i T) = 1 - 1/d^2.
DenseMatrix<Rational> seminormal_matrix(const Partition& mu, int i);

/// Young's orthogonal form of s_i: off-diagonal entries sqrt(1 - 1/d^2).
DenseMatrix<double> orthogonal_matrix(const Partition& mu, int i);

/// Seminormal matrix of an arbitrary permutation, via a reduced word.
DenseMatrix<Rational> seminormal_representation(const Partition& mu, const Permutation& sigma);

/// Character value chi^mu(sigma), exact.
BigInt character(const Partition& mu, const Permutation& sigma);

/// Matrix of X_j = sum_{i<j} (i j) acting on the tabloid space.
SparseFactor jm_matrix(int j, const TabloidSpace& space);

class OracleScaleExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest j accepted by multiplicity_oracle.
inline constexpr int kOracleMaxDegree = 6;

/// Multiplicity of S^mu in CX^lambda restricted to S_j (j = |mu|), by the
/// character inner product (1/j!) sum_sigma fix(sigma) chi^mu(sigma).
BigInt multiplicity_oracle(const Partition& lambda, const Partition& mu, int j);

}  // namespace permfft
