#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "permfft/combinatorics.hpp"
#include "permfft/sparse.hpp"
#include "permfft/symmetric_group.hpp"

namespace permfft {

/// Row-equivalence class of tableaux; each row kept sorted ascending.
class Tabloid {
 public:
  Tabloid() = default;
  /// Rows must be disjoint and cover 1..n.
  explicit Tabloid(std::vector<std::vector<int>> rows);
  /// rows[p-1] is the 0-based row of entry p; `row_count` fixes trailing empty rows.
  static Tabloid from_row_word(const std::vector<int>& word, int row_count);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int n() const { return n_; }
  WeakComposition shape() const;
  std::vector<int> row_word() const;
  std::string to_string() const;

  friend bool operator==(const Tabloid&, const Tabloid&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  int n_ = 0;
};

/// S_j-orbit key: the rows of entries j+1, ..., n.
struct OrbitKey {
  int level = 0;
  std::vector<int> assignment;

  friend bool operator==(const OrbitKey&, const OrbitKey&) = default;
  friend auto operator<=>(const OrbitKey&, const OrbitKey&) = default;
};

struct Orbit {
  OrbitKey key;
  std::vector<std::size_t> members;  // ascending element indices
  WeakComposition rows;              // row sizes restricted to 1..j
  Partition shape;                   // to_partition(rows)
};

/// All tabloids of a shape, enumerated lexicographically by (row of n,
/// row of n-1, ..., row of 1). S_j-orbits are therefore contiguous.
class TabloidSpace {
 public:
  explicit TabloidSpace(Partition shape);

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.size(); }
  std::size_t size() const { return count_; }

  /// Row of entry p (1-based) in element i.
  int row_of(std::size_t i, int entry) const {
    return words_[i * static_cast<std::size_t>(n()) + static_cast<std::size_t>(entry - 1)];
  }
  std::vector<int> word(std::size_t i) const;
  Tabloid at(std::size_t i) const;

  /// Throws std::out_of_range for foreign tabloids.
  std::size_t index_of(const Tabloid& t) const;
  std::size_t index_of_word(const std::vector<int>& word) const;

 private:
  Partition shape_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> words_;
  std::unordered_map<std::string, std::size_t> index_;
};

TabloidSpace enumerate(const Partition& lambda);

/// sigma . T: apply sigma to every entry.
Tabloid act(const Permutation& sigma, const Tabloid& t);

/// [phi(sigma)]_{ij} = 1 iff sigma x_j = x_i.
SparseFactor permutation_matrix(const Permutation& sigma, const TabloidSpace& space);

/// Orbits of S_j (permuting 1..j) ordered by their first element.
std::vector<Orbit> orbits_under(const TabloidSpace& space, int j);

}  // namespace permfft
