#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permfft/combinatorics.hpp"
#include "permfft/sparse.hpp"
#include "permfft/transform.hpp"

namespace permfft {

/// Multiplicity of each S_{j-1}-irreducible inside one S_j-orbit of X^lambda,
/// for every orbit type. Computed from orbit shapes and Young's rule only.
struct OrbitRestriction {
  std::vector<int> rows;  // row sizes of entries 1..j
  BigInt orbit_count;     // number of S_j-orbits with these row sizes
  std::map<Partition, BigInt> multiplicity;  // mu |- j-1
};

std::vector<OrbitRestriction> orbit_restrictions(const Partition& lambda, int j);

/// Sum over S_j-orbits of sum_mu mult(mu)^2 dim(S^mu). Requires 2 <= j <= n.
BigInt phi(const Partition& lambda, int j);
/// Largest multiplicity over orbits and mu. Requires 2 <= j <= n.
BigInt k_max(const Partition& lambda, int j);

/// d_{mu/(n-k-1)} + k d_{mu/(n-k)} for mu |- n-1; 0 outside D(n-1, n-k-1).
BigInt hook_multiplicity(const Partition& mu, int n, int k);

/// 2 sum_{j=2}^n q_j^2 q_{j+1} ... q_n d^3(S_{j-1}) with q_j = j.
BigInt clausen_chain_bound(int n);
/// 4 (n-1) binomial(n, k); requires 0 <= k <= n/2.
BigInt two_row_bound(int n, int k);
/// 2 N(k) (n-1) (n)_k; requires 1 <= k < n.
BigInt hook_bound(int n, int k);
/// Column-by-column count for the top factor of (n-k, 1^k):
/// sum over mu in D(n-1, n-k-1) of hook_multiplicity(mu)^2 dim(S^mu).
BigInt refined_hook_level_bound(int n, int k);
/// 2 m^2 operations for a dense m x m product.
BigInt naive_bound(std::size_t m);

struct LevelBound {
  int level = 0;
  BigInt phi;
  BigInt k_max;
  std::size_t nnz = 0;
  std::size_t max_column_nnz = 0;
  BigInt slack;  // phi - nnz
  bool nnz_ok = true;
  bool column_ok = true;
};

struct BoundCheck {
  std::string name;
  BigInt bound;
  BigInt measured;
  bool holds = true;
};

struct BoundReport {
  Partition shape;
  std::size_t size = 0;
  std::vector<LevelBound> levels;
  BigInt corollary_bound;  // 2 sum_j phi
  BigInt naive_bound;      // 2 m^2
  std::optional<BigInt> two_row_bound;
  std::optional<BigInt> hook_bound;
  std::optional<BigInt> refined_hook_bound;
  std::optional<OpCount> measured;
  std::vector<BoundCheck> checks;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Checks every factor of the plan against phi and k_max and, when an
/// operation count is supplied, the operation-count bounds that apply to
/// the shape. Failures are reported, never thrown.
BoundReport verify(const TransformPlan& plan, const std::optional<OpCount>& measured = std::nullopt);

/// (n - k, k) with 1 <= k <= n/2, or nullopt.
std::optional<int> two_row_k(const Partition& lambda);
/// (n - k, 1^k) with k >= 1 and n - k >= 1, or nullopt.
std::optional<int> hook_k(const Partition& lambda);

}  // namespace permfft
