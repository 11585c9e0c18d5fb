#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "permfft/numeric.hpp"

namespace permfft {

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (0-based); 0 past the last part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Removes the box at the end of row `row`; the result must stay a partition.
  Partition remove_box(int row) const;
  /// Adds a box at the end of row `row` (row == length() appends a new row).
  Partition add_box(int row) const;
  /// Rows whose last box can be removed, top to bottom.
  std::vector<int> removable_rows() const;
  /// Rows where a box can be added, top to bottom.
  std::vector<int> addable_rows() const;

  std::string to_string() const;
  /// Parses "3,1,1" (also accepts surrounding parentheses and spaces).
  static Partition parse(const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Sequence of nonnegative integers; the row lengths of a tabloid shape.
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }

  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct SkewShape {
  Partition outer;
  Partition inner;

  bool valid() const;  // outer contains inner
  int boxes() const { return outer.size() - inner.size(); }
};

bool contains(const Partition& outer, const Partition& inner);

Partition to_partition(const WeakComposition& alpha);

/// True iff lambda is dominated by mu (lambda ⊴ mu). Throws std::domain_error
/// when the sizes differ.
bool dominates(const Partition& lambda, const Partition& mu);

/// Number of column-strict fillings of shape mu with content lambda.
BigInt kostka(const Partition& mu, const Partition& lambda);
/// Same count with an arbitrary content vector (order of the content is irrelevant).
BigInt kostka(const Partition& mu, const std::vector<int>& content);

/// Number of standard Young tableaux of shape mu (hook length formula).
BigInt dim_specht(const Partition& mu);

/// Standard skew tableaux of outer/inner; 0 when inner is not contained.
BigInt num_standard_skew(const SkewShape& shape);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// Partitions of ell with first part >= r, reverse lexicographic order.
std::vector<Partition> dominating_set(int ell, int r);

/// max over mu in D(n-1, n-k-1) of d_{mu/(n-k-1)} + k d_{mu/(n-k)}.
BigInt m_bound(int n, int k);

/// The stabilized value max_n m_bound(n, k).
BigInt n_bound(int k);

/// n (n-1) ... (n-k+1). Throws std::domain_error unless 0 <= k <= n.
BigInt falling_factorial(int n, int k);
BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Sum over mu |- j of dim_specht(mu)^3.
BigInt sum_cubed_dims(int j);

}  // namespace permfft
