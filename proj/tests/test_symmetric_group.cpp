#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "permfft/symmetric_group.hpp"
#include "permfft/tabloids.hpp"

using namespace permfft;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace

TEST(Permutation, CompositionAndReducedWord) {
  const auto a = Permutation::from_cycles(4, {{1, 2, 3}});
  EXPECT_EQ(a(1), 2);
  EXPECT_EQ(a(3), 1);
  EXPECT_EQ(a * a.inverse(), Permutation::identity(4));
  for (const auto& sigma : all_permutations(5)) {
    auto product = Permutation::identity(5);
    for (int i : sigma.reduced_word()) product = product * Permutation::adjacent(5, i);
    EXPECT_EQ(product, sigma);
    int inversions = 0;
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) inversions += sigma(i) > sigma(j);
    EXPECT_EQ(static_cast<int>(sigma.reduced_word().size()), inversions);
  }
}

TEST(StandardTableau, ContentsAndChain) {
  const StandardTableau t(P({2, 1}), {0, 0, 1});
  EXPECT_EQ(t.content(1), 0);
  EXPECT_EQ(t.content(2), 1);
  EXPECT_EQ(t.content(3), -1);
  EXPECT_EQ(t.chain(), (std::vector<Partition>{P({1}), P({2}), P({2, 1})}));
  EXPECT_THROW(StandardTableau(P({2, 1}), {1, 0, 0}), std::invalid_argument);
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions_of(n)) {
      const auto& all = standard_tableaux(mu);
      EXPECT_EQ(BigInt(static_cast<unsigned long>(all.size())), dim_specht(mu));
      for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(tableau_index(mu, all[i].row_word()), i);
    }
}

TEST(StandardTableau, LastLetterOrder) {
  const auto& all = standard_tableaux(P({2, 1}));
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].row_word(), (std::vector<int>{0, 1, 0}));
  EXPECT_EQ(all[1].row_word(), (std::vector<int>{0, 0, 1}));
}

class SeminormalRelations : public ::testing::TestWithParam<int> {};

TEST_P(SeminormalRelations, CoxeterRelationsHold) {
  const int n = GetParam();
  for (const auto& mu : partitions_of(n)) {
    const auto d = static_cast<std::size_t>(to_u64(dim_specht(mu)));
    const auto id = DenseMatrix<Rational>::identity(d);
    std::vector<DenseMatrix<Rational>> s;
    std::vector<DenseMatrix<double>> o;
    for (int i = 1; i < n; ++i) {
      s.push_back(seminormal_matrix(mu, i));
      o.push_back(orthogonal_matrix(mu, i));
    }
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); ++i) {
      EXPECT_EQ(s[i] * s[i], id) << mu.to_string() << " s" << i + 1;
      const auto oo = o[i] * o[i].transpose();
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) EXPECT_NEAR(oo(r, c), r == c ? 1.0 : 0.0, 1e-12);
      EXPECT_EQ(o[i], o[i].transpose());
      if (i + 2 < static_cast<std::size_t>(n))
        EXPECT_EQ(s[i] * s[i + 1] * s[i], s[i + 1] * s[i] * s[i + 1]) << mu.to_string();
      for (std::size_t j = i + 2; j + 1 < static_cast<std::size_t>(n); ++j) EXPECT_EQ(s[i] * s[j], s[j] * s[i]);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallN, SeminormalRelations, ::testing::Values(2, 3, 4, 5, 6));

TEST(Seminormal, TrivialAndSignRepresentations) {
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(seminormal_matrix(P({n}), i)(0, 0), Rational(1));
      EXPECT_EQ(seminormal_matrix(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), i)(0, 0),
                Rational(-1));
    }
}

TEST(Seminormal, SmallBlock) {
  // T1 = rows {1,3},{2}; T2 = rows {1,2},{3}; s_2 has axial distance 2 from T1.
  const auto m = seminormal_matrix(P({2, 1}), 2);
  EXPECT_EQ(m(0, 0), Rational(1, 2));
  EXPECT_EQ(m(1, 1), Rational(-1, 2));
  EXPECT_EQ(m(0, 1) * m(1, 0), Rational(3, 4));
}

TEST(Seminormal, OrthogonalIsDiagonalRescaling) {
  for (const auto& mu : partitions_of(5)) {
    for (int i = 1; i < 5; ++i) {
      const auto s = seminormal_matrix(mu, i);
      const auto o = orthogonal_matrix(mu, i);
      for (std::size_t r = 0; r < s.rows(); ++r) {
        EXPECT_NEAR(o(r, r), to_double(s(r, r)), 1e-14);
        for (std::size_t c = 0; c < s.cols(); ++c)
          if (r != c) EXPECT_NEAR(o(r, c) * o(c, r), to_double(s(r, c) * s(c, r)), 1e-14);
      }
    }
  }
}

TEST(Character, OrthogonalityRelations) {
  for (int n = 1; n <= 5; ++n) {
    const auto group = all_permutations(n);
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n)) {
        BigInt sum = 0;
        for (const auto& g : group) sum += character(a, g) * character(b, g);
        EXPECT_EQ(sum, a == b ? factorial(n) : BigInt(0)) << a.to_string() << " " << b.to_string();
      }
  }
}

TEST(Character, RepresentationIsHomomorphism) {
  const auto mu = P({3, 2});
  const auto group = all_permutations(5);
  for (std::size_t i = 0; i < group.size(); i += 7)
    for (std::size_t j = 3; j < group.size(); j += 11)
      EXPECT_EQ(seminormal_representation(mu, group[i]) * seminormal_representation(mu, group[j]),
                seminormal_representation(mu, group[i] * group[j]));
}

TEST(JucysMurphy, SymmetricCommutingAndCounted) {
  const auto space = enumerate(P({3, 2, 1}));
  std::vector<DenseMatrix<Rational>> x;
  for (int j = 1; j <= 6; ++j) {
    const auto m = oracle::to_dense(jm_matrix(j, space));
    EXPECT_EQ(m, m.transpose());
    // Column sums count the j - 1 transpositions (i j).
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational sum = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) sum += m(r, c);
      EXPECT_EQ(sum, Rational(j - 1));
    }
    x.push_back(m);
  }
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b) EXPECT_EQ(x[a] * x[b], x[b] * x[a]);
}

TEST(MultiplicityOracle, Examples) {
  const auto lambda = P({2, 1, 1});
  EXPECT_EQ(multiplicity_oracle(lambda, P({4}), 4), 1);
  EXPECT_EQ(multiplicity_oracle(lambda, P({3, 1}), 4), 2);
  EXPECT_EQ(multiplicity_oracle(lambda, P({2, 2}), 4), 1);
  EXPECT_EQ(multiplicity_oracle(lambda, P({2, 1, 1}), 4), 1);
  EXPECT_EQ(multiplicity_oracle(lambda, P({1, 1, 1, 1}), 4), 0);
  for (int k = 0; k <= 3; ++k)
    for (int m = 0; m <= k; ++m) {
      const Partition two_row = m == 0 ? P({6}) : P({6 - m, m});
      EXPECT_EQ(multiplicity_oracle(k == 0 ? P({6}) : P({6 - k, k}), two_row, 6), 1);
    }
  EXPECT_THROW(multiplicity_oracle(P({4, 3}), P({4, 3}), 7), OracleScaleExceeded);
}

TEST(MultiplicityOracle, AgreesWithKostka) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& mu : partitions_of(n)) EXPECT_EQ(multiplicity_oracle(lambda, mu, n), kostka(mu, lambda));
}
