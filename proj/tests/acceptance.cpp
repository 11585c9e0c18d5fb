// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "permfft/adapted_basis.hpp"
#include "permfft/bounds.hpp"
#include "permfft/transform.hpp"

using namespace permfft;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

Partition hook(int n, int k) {
  std::vector<int> parts{n - k};
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return Partition(parts);
}

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

// Collects the reasons a criterion failed; an empty list means PASS.
struct Checker {
  std::vector<std::string> problems;
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      problems.push_back(s.str());
    }
  }
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

DenseMatrix<Rational> R(std::vector<std::vector<Rational>> rows) {
  DenseMatrix<Rational> m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

void small_fixture(Checker& c) {
  const auto chain = build_chain(P({2, 1}), Normalization::leading_one);
  const Rational h(1, 2), t(2, 3), third(1, 3);
  const auto c21 = oracle::to_dense(chain.exact_factor(2));
  const auto c32 = oracle::to_dense(chain.exact_factor(3));
  c.require(c21 == R({{h, h, 0}, {h, -h, 0}, {0, 0, 1}}), "C(B2,B1) differs");
  c.require(c32 == R({{t, 0, third}, {0, 1, 0}, {t, 0, -t}}), "C(B3,B2) differs");
  c.require(c32 * c21 == R({{third, third, third}, {h, -h, 0}, {third, third, -t}}), "product differs");
}

void table_constants(Checker& c) {
  const std::vector<long> want{4, 9, 18, 60, 160, 420, 1344, 5376, 16800, 59400, 222750, 878592};
  for (int k = 2; k <= 13; ++k) c.equal(n_bound(k), BigInt(want[static_cast<std::size_t>(k - 2)]), "N(" + std::to_string(k) + ")");
}

void m_values(Checker& c) {
  c.equal(m_bound(7, 6), BigInt(112), "M(7,6)");
  c.equal(m_bound(8, 6), BigInt(155), "M(8,6)");
  c.equal(m_bound(9, 6), BigInt(160), "M(9,6)");
  c.equal(m_bound(10, 6), BigInt(160), "M(10,6)");
}

void oracle_equivalence(Checker& c) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n))
        c.equal(kostka(mu, lambda), multiplicity_oracle(lambda, mu, n),
                "kostka " + mu.to_string() + " " + lambda.to_string());
}

void factor_sparsity(Checker& c) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& lambda : partitions_of(n))
      for (auto mode : {Normalization::leading_one, Normalization::orthonormal}) {
        const auto p = plan(lambda, mode);
        for (int j = 2; j <= n; ++j) {
          const auto& f = p.factors[static_cast<std::size_t>(j - 2)];
          const std::string where = lambda.to_string() + " " + to_string(mode) + " j=" + std::to_string(j);
          c.require(big(f.nnz()) <= phi(lambda, j), "nnz above phi at " + where);
          c.require(big(f.max_column_count()) <= k_max(lambda, j), "column count above K at " + where);
          if (p.exact()) c.require(p.exact_factors[static_cast<std::size_t>(j - 2)].nnz() == f.nnz(), "exact/double nnz differ at " + where);
        }
      }
}

void transform_correctness(Checker& c) {
  std::mt19937_64 rng(1729);
  for (const auto& lambda : {P({5, 5}), P({7, 3}), P({5, 1, 1, 1})}) {
    const auto p = plan(lambda);
    auto dense = DenseMatrix<double>::identity(p.size);
    for (const auto& f : p.factors) dense = oracle::to_dense(f) * dense;
    double worst = 0, worst_round = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto f = oracle::random_vector(rng, p.size);
      const auto spectrum = permfft::apply(p, f).first;
      worst = std::max(worst, oracle::relative_error(spectrum.coefficients, oracle::dense_apply(dense, f)));
      worst_round = std::max(worst_round, oracle::relative_error(inverse(p, spectrum), f));
    }
    c.require(worst < 1e-9, lambda.to_string() + " forward error " + std::to_string(worst));
    c.require(worst_round < 1e-9, lambda.to_string() + " round-trip error " + std::to_string(worst_round));
  }
}

void operation_counts(Checker& c) {
  auto measure = [&](const Partition& lambda, const BigInt& bound, const std::string& what) {
    const auto p = plan(lambda);
    const std::vector<double> f(p.size, 1.0);
    const auto ops = permfft::apply(p, f).second.total();
    c.require(big(ops) < bound, what + " " + lambda.to_string() + ": " + std::to_string(ops) + " >= " + to_string(bound));
    if (lambda.size() >= 6) {
      const auto naive = apply_naive(p, f).second.total();
      c.require(ops < naive, "not below naive for " + lambda.to_string() + ": factored " + std::to_string(ops) +
                                 ", naive " + std::to_string(naive));
    }
  };
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; k <= 5 && 2 * k <= n; ++k) measure(P({n - k, k}), two_row_bound(n, k), "two-row");
  for (int n = 2; n <= 8; ++n)
    for (int k = 2; k <= 3 && k < n; ++k) measure(hook(n, k), hook_bound(n, k), "hook");
  // The k = 1 hook is the two-row shape (n-1, 1) and was measured above; check its hook bound only.
  for (int n = 2; n <= 8; ++n) {
    const auto p = plan(hook(n, 1));
    const std::vector<double> f(p.size, 1.0);
    const auto ops = permfft::apply(p, f).second.total();
    c.require(big(ops) < hook_bound(n, 1), "hook " + hook(n, 1).to_string());
  }
}

void regular_module(Checker& c) {
  for (int n = 3; n <= 5; ++n)
    c.equal(phi(ones(n), n), BigInt(n * n) * sum_cubed_dims(n - 1), "phi of the regular module n=" + std::to_string(n));
  for (int n = 4; n <= 5; ++n) {
    const auto p = plan(ones(n));
    const std::vector<double> f(p.size, 1.0);
    const auto ops = permfft::apply(p, f).second.total();
    c.require(big(ops) < clausen_chain_bound(n), "chain bound n=" + std::to_string(n));
  }
}

void parseval(Checker& c) {
  std::mt19937_64 rng(31);
  for (const auto& lambda : {P({6, 3}), P({5, 1, 1})}) {
    const auto p = plan(lambda, Normalization::orthonormal);
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = oracle::random_vector(rng, p.size);
      const double norm2 = oracle::norm(f) * oracle::norm(f);
      const double energy = permfft::apply(p, f).first.total_energy();
      c.require(std::abs(energy - norm2) < 1e-9 * norm2, lambda.to_string() + " energy mismatch");
    }
  }
}

void two_row_multiplicity_free(Checker& c) {
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      const auto lambda = P({n - k, k});
      for (const auto& mu : partitions_of(n)) {
        const auto m = kostka(mu, lambda);
        c.require(m == 0 || m == 1, "kostka above 1 for " + mu.to_string() + " in " + lambda.to_string());
      }
      const auto chain = build_chain(lambda, Normalization::leading_one);
      for (const auto& rec : chain.frequency_records())
        if (rec.level == n) c.require(rec.dimension == 1, "top multiplicity above 1 in " + lambda.to_string());
      for (int j = 2; j <= n; ++j) {
        c.require(k_max(lambda, j) <= 2, "K above 2 in " + lambda.to_string());
        c.require(chain.factor(j).max_column_count() <= 2, "column count above 2 in " + lambda.to_string());
      }
    }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"small fixture factors bit-exact", small_fixture},
      {"N(k) table constants", table_constants},
      {"M(n,6) values", m_values},
      {"kostka equals character oracle", oracle_equivalence},
      {"factor nnz and column counts within phi and K", factor_sparsity},
      {"factored transform matches dense product", transform_correctness},
      {"operation counts below two-row, hook and naive bounds", operation_counts},
      {"regular module phi and chain bound", regular_module},
      {"orthonormal Parseval", parseval},
      {"two-row multiplicity free with K at most 2", two_row_multiplicity_free},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.problems.empty();
    failures += ok ? 0 : 1;
    std::cout << "criterion " << i + 1 << " " << criteria[i].first << ": " << (ok ? "PASS" : "FAIL") << " ("
              << secs << " s)\n";
    for (std::size_t p = 0; p < c.problems.size() && p < 10; ++p) std::cout << "    " << c.problems[p] << '\n';
  }
  return failures == 0 ? 0 : 1;
}
