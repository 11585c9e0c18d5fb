#include "permfft/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace permfft {

namespace {

void check_level(const Partition& lambda, int j) {
  if (j < 2 || j > lambda.size()) throw std::domain_error("level must satisfy 2 <= j <= n");
}

Partition single_row(int length) { return length > 0 ? Partition({length}) : Partition(); }

}  // namespace

std::vector<OrbitRestriction> orbit_restrictions(const Partition& lambda, int j) {
  check_level(lambda, j);
  const int n = lambda.size();
  const auto k = static_cast<std::size_t>(lambda.length());
  std::vector<OrbitRestriction> out;
  std::map<std::vector<int>, std::map<Partition, BigInt>> by_type;
  std::vector<int> beta(k, 0);

  auto visit = [&] {
    // Entries j+1..n are spread over the rows as lambda - beta.
    BigInt count = factorial(n - j);
    for (std::size_t a = 0; a < k; ++a) count /= factorial(lambda[a] - beta[a]);
    std::vector<int> type = beta;
    std::sort(type.begin(), type.end(), std::greater<>());
    auto it = by_type.find(type);
    if (it == by_type.end()) {
      std::map<Partition, BigInt> mult;
      for (std::size_t a = 0; a < k; ++a) {
        if (beta[a] == 0) continue;
        std::vector<int> content = beta;
        --content[a];
        for (const auto& mu : partitions_of(j - 1)) {
          BigInt c = kostka(mu, content);
          if (sgn(c) != 0) mult[mu] += c;
        }
      }
      it = by_type.emplace(type, std::move(mult)).first;
    }
    out.push_back({beta, count, it->second});
  };

  auto fill = [&](auto&& self, std::size_t a, int remaining) -> void {
    if (a == k) {
      if (remaining == 0) visit();
      return;
    }
    for (int b = std::min(remaining, lambda[a]); b >= 0; --b) {
      beta[a] = b;
      self(self, a + 1, remaining - b);
    }
    beta[a] = 0;
  };
  fill(fill, 0, j);
  return out;
}

BigInt phi(const Partition& lambda, int j) {
  BigInt total = 0;
  for (const auto& r : orbit_restrictions(lambda, j)) {
    BigInt per_orbit = 0;
    for (const auto& [mu, m] : r.multiplicity) per_orbit += m * m * dim_specht(mu);
    total += r.orbit_count * per_orbit;
  }
  return total;
}

BigInt k_max(const Partition& lambda, int j) {
  BigInt best = 0;
  for (const auto& r : orbit_restrictions(lambda, j))
    for (const auto& [mu, m] : r.multiplicity) best = std::max(best, m);
  return best;
}

BigInt hook_multiplicity(const Partition& mu, int n, int k) {
  if (k < 0 || k >= n || mu.size() != n - 1) throw std::domain_error("hook_multiplicity needs mu |- n-1, 0 <= k < n");
  if (mu[0] < n - k - 1) return 0;
  return num_standard_skew({mu, single_row(n - k - 1)}) + BigInt(k) * num_standard_skew({mu, single_row(n - k)});
}

BigInt clausen_chain_bound(int n) {
  if (n < 1) throw std::domain_error("clausen_chain_bound needs n >= 1");
  BigInt total = 0;
  for (int j = 2; j <= n; ++j) total += BigInt(j) * j * (factorial(n) / factorial(j)) * sum_cubed_dims(j - 1);
  return 2 * total;
}

BigInt two_row_bound(int n, int k) {
  if (k < 0 || 2 * k > n) throw std::domain_error("two_row_bound needs 0 <= k <= n/2");
  return 4 * BigInt(n - 1) * binomial(n, k);
}

BigInt hook_bound(int n, int k) {
  if (k < 1 || k >= n) throw std::domain_error("hook_bound needs 1 <= k < n");
  return 2 * n_bound(k) * (n - 1) * falling_factorial(n, k);
}

BigInt refined_hook_level_bound(int n, int k) {
  if (k < 1 || k >= n) throw std::domain_error("refined_hook_level_bound needs 1 <= k < n");
  BigInt total = 0;
  for (const auto& mu : dominating_set(n - 1, n - k - 1)) {
    const BigInt m = hook_multiplicity(mu, n, k);
    total += m * m * dim_specht(mu);
  }
  return total;
}

BigInt naive_bound(std::size_t m) {
  const BigInt size(static_cast<unsigned long>(m));
  return 2 * size * size;
}

std::optional<int> two_row_k(const Partition& lambda) {
  if (lambda.length() != 2) return std::nullopt;
  return lambda[1];
}

std::optional<int> hook_k(const Partition& lambda) {
  if (lambda.length() < 2) return std::nullopt;
  for (std::size_t i = 1; i < static_cast<std::size_t>(lambda.length()); ++i)
    if (lambda[i] != 1) return std::nullopt;
  return lambda.length() - 1;
}

BoundReport verify(const TransformPlan& plan, const std::optional<OpCount>& measured) {
  BoundReport report;
  report.shape = plan.shape;
  report.size = plan.size;
  report.naive_bound = naive_bound(plan.size);
  report.measured = measured;
  const int n = plan.n();
  BigInt phi_sum = 0;
  for (int j = 2; j <= n; ++j) {
    const auto& factor = plan.factors[static_cast<std::size_t>(j - 2)];
    LevelBound level;
    level.level = j;
    level.phi = phi(plan.shape, j);
    level.k_max = k_max(plan.shape, j);
    level.nnz = factor.nnz();
    level.max_column_nnz = factor.max_column_count();
    const BigInt nnz(static_cast<unsigned long>(level.nnz));
    level.slack = level.phi - nnz;
    level.nnz_ok = nnz <= level.phi;
    level.column_ok = BigInt(static_cast<unsigned long>(level.max_column_nnz)) <= level.k_max;
    if (!level.nnz_ok) {
      report.failures.push_back("level " + std::to_string(j) + ": nnz " + std::to_string(level.nnz) +
                                " exceeds phi " + to_string(level.phi));
    }
    if (!level.column_ok) {
      report.failures.push_back("level " + std::to_string(j) + ": column nnz " +
                                std::to_string(level.max_column_nnz) + " exceeds K " + to_string(level.k_max));
    }
    phi_sum += level.phi;
    report.levels.push_back(std::move(level));
  }
  report.corollary_bound = 2 * phi_sum;

  if (auto k = two_row_k(plan.shape)) report.two_row_bound = two_row_bound(n, *k);
  if (auto k = hook_k(plan.shape)) {
    report.hook_bound = hook_bound(n, *k);
    report.refined_hook_bound = refined_hook_level_bound(n, *k);
    if (n >= 2 && report.refined_hook_bound > report.levels.back().phi) {
      report.failures.push_back("refined column bound exceeds phi at level " + std::to_string(n));
    }
  }

  if (measured && n >= 2) {
    const BigInt omega(static_cast<unsigned long>(measured->total()));
    auto check = [&](const std::string& name, const BigInt& bound) {
      const bool holds = omega < bound;
      report.checks.push_back({name, bound, omega, holds});
      if (!holds) report.failures.push_back(name + ": measured " + to_string(omega) + " is not below " + to_string(bound));
    };
    check("corollary", report.corollary_bound);
    if (report.two_row_bound) check("two-row", *report.two_row_bound);
    if (report.hook_bound) check("hook", *report.hook_bound);
  }
  return report;
}

}  // namespace permfft
