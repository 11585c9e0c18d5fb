#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permfft/combinatorics.hpp"

using namespace permfft;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST(Partition, RejectsInvalidParts) {
  EXPECT_THROW(P({1, 2}), std::invalid_argument);
  EXPECT_THROW(P({2, 0}), std::invalid_argument);
  EXPECT_NO_THROW(P({}));
  EXPECT_EQ(P({3, 1, 1}).size(), 5);
}

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("3,1,1"), P({3, 1, 1}));
  EXPECT_EQ(Partition::parse(" (4, 2) "), P({4, 2}));
  EXPECT_EQ(P({3, 1, 1}).to_string(), "(3,1,1)");
  EXPECT_THROW(Partition::parse("1,2"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("3,x"), std::invalid_argument);
}

TEST(Partition, Boxes) {
  const auto mu = P({3, 3, 1});
  EXPECT_EQ(mu.removable_rows(), (std::vector<int>{1, 2}));
  EXPECT_EQ(mu.addable_rows(), (std::vector<int>{0, 2, 3}));
  EXPECT_EQ(mu.remove_box(1), P({3, 2, 1}));
  EXPECT_EQ(mu.add_box(3), P({3, 3, 1, 1}));
}

TEST(ToPartition, SortsPositiveParts) {
  EXPECT_EQ(to_partition(WeakComposition({3, 4, 0, 1, 0, 2})), P({4, 3, 2, 1}));
  EXPECT_EQ(to_partition(WeakComposition({0, 0, 0})), P({}));
  EXPECT_EQ(to_partition(WeakComposition({2, 2})), P({2, 2}));
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominates(P({3, 1, 1}), P({4, 1})));
  EXPECT_TRUE(dominates(P({2, 2}), P({2, 2})));
  EXPECT_TRUE(dominates(P({2, 2}), P({3, 1})));
  EXPECT_FALSE(dominates(P({3, 1}), P({2, 2})));
  EXPECT_THROW(dominates(P({2}), P({3})), std::domain_error);
}

TEST(Dominance, MatchesPrefixSums) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& a : partitions_of(n)) {
      for (const auto& b : partitions_of(n)) {
        bool expected = true;
        int sa = 0, sb = 0;
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
          sa += a[i];
          sb += b[i];
          expected = expected && sa <= sb;
        }
        EXPECT_EQ(dominates(a, b), expected) << a.to_string() << " " << b.to_string();
      }
    }
  }
}

TEST(Kostka, Examples) {
  EXPECT_EQ(kostka(P({4, 1}), P({3, 1, 1})), 2);
  EXPECT_EQ(kostka(P({3, 2}), P({3, 2})), 1);
  EXPECT_EQ(kostka(P({5}), P({2, 2, 1})), 1);
  EXPECT_EQ(kostka(P({2, 2}), P({3, 1})), 0);
  EXPECT_THROW(kostka(P({2}), P({3})), std::domain_error);
}

TEST(Kostka, MatchesBruteForceFilling) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& mu : partitions_of(n)) {
      for (const auto& lambda : partitions_of(n)) {
        EXPECT_EQ(kostka(mu, lambda), oracle::kostka(mu, lambda.parts()))
            << mu.to_string() << " " << lambda.to_string();
        EXPECT_EQ(sgn(kostka(mu, lambda)) > 0, dominates(lambda, mu));
      }
    }
  }
}

TEST(Kostka, ContentOrderIsIrrelevant) {
  EXPECT_EQ(kostka(P({3, 2}), std::vector<int>{1, 0, 2, 2}), oracle::kostka(P({3, 2}), {1, 0, 2, 2}));
  EXPECT_EQ(kostka(P({3, 2}), std::vector<int>{2, 2, 1}), kostka(P({3, 2}), std::vector<int>{1, 2, 2}));
}

TEST(Kostka, DimensionCount) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      BigInt total = 0;
      for (const auto& mu : partitions_of(n)) total += kostka(mu, lambda) * dim_specht(mu);
      EXPECT_EQ(total, oracle::multinomial(lambda.parts())) << lambda.to_string();
    }
  }
}

TEST(DimSpecht, MatchesSkewCountAndSquares) {
  for (int n = 1; n <= 7; ++n) {
    BigInt squares = 0;
    for (const auto& mu : partitions_of(n)) {
      EXPECT_EQ(dim_specht(mu), oracle::standard_skew(mu, P({})));
      squares += dim_specht(mu) * dim_specht(mu);
    }
    EXPECT_EQ(squares, factorial(n));
  }
  EXPECT_EQ(dim_specht(P({6})), 1);
  EXPECT_EQ(dim_specht(P({1, 1, 1, 1})), 1);
}

TEST(StandardSkew, MatchesBacktracking) {
  EXPECT_EQ(num_standard_skew({P({5, 4, 2}), P({3, 1})}), oracle::standard_skew(P({5, 4, 2}), P({3, 1})));
  EXPECT_GE(num_standard_skew({P({5, 4, 2}), P({3, 1})}), 2);
  EXPECT_EQ(num_standard_skew({P({3, 2}), P({3, 2})}), 1);
  EXPECT_EQ(num_standard_skew({P({2, 2}), P({3})}), 0);
  for (int n = 1; n <= 7; ++n)
    for (const auto& outer : partitions_of(n))
      for (int m = 0; m <= n; ++m)
        for (const auto& inner : m == 0 ? std::vector<Partition>{P({})} : partitions_of(m))
          EXPECT_EQ(num_standard_skew({outer, inner}), oracle::standard_skew(outer, inner))
              << outer.to_string() << "/" << inner.to_string();
}

TEST(DominatingSet, Examples) {
  EXPECT_EQ(dominating_set(3, 3), (std::vector<Partition>{P({3})}));
  EXPECT_EQ(dominating_set(4, 2), (std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1})}));
  EXPECT_TRUE(dominating_set(3, 4).empty());
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int l = 0; l <= 8; ++l) EXPECT_EQ(dominating_set(l, 0).size(), counts[static_cast<std::size_t>(l)]);
}

TEST(MBound, KnownValues) {
  EXPECT_EQ(m_bound(7, 6), 112);
  EXPECT_EQ(m_bound(8, 6), 155);
  EXPECT_EQ(m_bound(9, 6), 160);
  EXPECT_EQ(m_bound(10, 6), 160);
  EXPECT_THROW(m_bound(5, 5), std::domain_error);
}

TEST(MBound, MatchesDefinition) {
  for (int n = 3; n <= 9; ++n) {
    for (int k = 1; k < n; ++k) {
      BigInt best = 0;
      for (const auto& mu : dominating_set(n - 1, n - k - 1)) {
        const Partition a = n - k - 1 > 0 ? P({n - k - 1}) : P({});
        BigInt v = oracle::standard_skew(mu, a) + k * oracle::standard_skew(mu, P({n - k}));
        if (v > best) best = v;
      }
      EXPECT_EQ(m_bound(n, k), best) << n << "," << k;
    }
  }
}

TEST(MBound, MonotoneInN) {
  for (int k = 1; k <= 6; ++k)
    for (int n = k + 2; n <= 3 * k + 4; ++n) EXPECT_LE(m_bound(n - 1, k), m_bound(n, k));
}

TEST(NBound, SmallValues) {
  EXPECT_EQ(n_bound(2), 4);
  EXPECT_EQ(n_bound(3), 9);
  EXPECT_EQ(n_bound(6), 160);
  for (int k = 1; k <= 6; ++k)
    for (int n = k + 1; n <= 3 * k + 6; ++n) EXPECT_LE(m_bound(n, k), n_bound(k));
}

TEST(FallingFactorial, Values) {
  EXPECT_EQ(falling_factorial(7, 1), 7);
  EXPECT_EQ(falling_factorial(4, 2), 12);
  EXPECT_EQ(falling_factorial(5, 0), 1);
  EXPECT_THROW(falling_factorial(3, 4), std::domain_error);
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k < n; ++k) {
      std::vector<int> parts{n - k};
      parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
      EXPECT_EQ(falling_factorial(n, k), oracle::multinomial(parts));
    }
}

TEST(PartitionsOf, ReverseLexicographic) {
  const auto ps = partitions_of(4);
  EXPECT_EQ(ps, (std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})}));
  EXPECT_EQ(partitions_of(8).size(), 22u);
}
