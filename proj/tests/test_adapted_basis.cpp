#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "permfft/adapted_basis.hpp"

using namespace permfft;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

DenseMatrix<Rational> R(std::vector<std::vector<Rational>> rows) {
  DenseMatrix<Rational> m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

// Dense matrix whose columns are the B_level coordinates.
DenseMatrix<Rational> basis_matrix(const AdaptedChain& chain, int level) {
  const auto basis = chain.basis_exact(level);
  DenseMatrix<Rational> m(chain.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < chain.size(); ++r) m(r, c) = basis[c].coords[r];
  return m;
}

}  // namespace

TEST(AdaptedChain, SmallFixtureFactors) {
  const auto chain = build_chain(P({2, 1}), Normalization::leading_one);
  const Rational h(1, 2), t(2, 3), third(1, 3);
  EXPECT_EQ(oracle::to_dense(chain.exact_factor(2)), R({{h, h, 0}, {h, -h, 0}, {0, 0, 1}}));
  EXPECT_EQ(oracle::to_dense(chain.exact_factor(3)), R({{t, 0, third}, {0, 1, 0}, {t, 0, -t}}));
  EXPECT_EQ(oracle::to_dense(chain.exact_factor(3)) * oracle::to_dense(chain.exact_factor(2)),
            R({{third, third, third}, {h, -h, 0}, {third, third, -t}}));
}

TEST(AdaptedChain, FactorsAndInversesCancel) {
  for (const auto& lambda : {P({3, 2}), P({2, 2, 1}), P({3, 1, 1})}) {
    const auto chain = build_chain(lambda, Normalization::leading_one);
    const auto id = DenseMatrix<Rational>::identity(chain.size());
    for (int j = 2; j <= lambda.size(); ++j)
      EXPECT_EQ(oracle::to_dense(chain.exact_factor(j)) * oracle::to_dense(chain.exact_inverse_factor(j)), id);
  }
}

TEST(AdaptedChain, TrivialShapeIsIdentity) {
  for (int n = 1; n <= 6; ++n) {
    const auto chain = build_chain(P({n}), Normalization::leading_one);
    ASSERT_EQ(chain.size(), 1u);
    for (int j = 2; j <= n; ++j) EXPECT_EQ(chain.exact_factor(j), SparseMatrix<Rational>::identity(1));
  }
}

TEST(AdaptedChain, LevelOneIsStandardBasis) {
  const auto chain = build_chain(P({3, 2}), Normalization::leading_one);
  EXPECT_EQ(basis_matrix(chain, 1), DenseMatrix<Rational>::identity(chain.size()));
  for (const auto& rec : chain.frequency_records()) {
    if (rec.level != 1) continue;
    EXPECT_EQ(rec.shape, P({1}));
  }
}

TEST(AdaptedChain, RegularModuleIsBlockDiagonal) {
  // Conjugating the permutation matrices of s_i, i < j, by the B_j basis must
  // leave only entries between vectors that share orbit, shape and copy.
  const auto chain = build_chain(P({1, 1, 1, 1}), Normalization::leading_one);
  for (int j = 2; j <= 4; ++j) {
    const auto b = basis_matrix(chain, j);
    const auto binv = inverse(b);
    const auto& labels = chain.labels(j);
    for (int i = 1; i < j; ++i) {
      const auto conj = binv * oracle::to_dense(permutation_matrix(Permutation::adjacent(4, i), chain.space())) * b;
      for (std::size_t r = 0; r < conj.rows(); ++r)
        for (std::size_t c = 0; c < conj.cols(); ++c) {
          if (sgn(conj(r, c)) == 0) continue;
          EXPECT_EQ(labels[r].orbit, labels[c].orbit);
          EXPECT_EQ(labels[r].shape, labels[c].shape);
          EXPECT_EQ(labels[r].copy, labels[c].copy);
        }
    }
  }
}

TEST(AdaptedChain, JucysMurphyEigenvaluesAreContents) {
  for (const auto& lambda : {P({3, 2}), P({2, 2, 1}), P({3, 1, 1, 1})}) {
    const auto chain = build_chain(lambda, Normalization::leading_one);
    const int n = lambda.size();
    for (int level = 2; level <= n; ++level) {
      const auto basis = chain.basis_exact(level);
      for (int j = 2; j <= level; ++j) {
        const auto x = jm_matrix(j, chain.space());
        for (const auto& v : basis) {
          const auto xv = x.multiply(std::span<const Rational>(v.coords));
          const Rational c = v.label.tableau.content(j);
          for (std::size_t r = 0; r < xv.size(); ++r) ASSERT_EQ(xv[r], c * v.coords[r]);
        }
      }
    }
  }
}

TEST(AdaptedChain, FrequencyDimensionsMatchKostka) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto chain = build_chain(lambda, Normalization::leading_one);
      for (int level = 1; level <= n; ++level) {
        const auto dims = frequency_dimensions(chain.frequency_records(), level);
        for (const auto& orbit : chain.orbits(level)) {
          for (const auto& mu : partitions_of(level)) {
            const auto it = dims.find({orbit.key, mu});
            const int got = it == dims.end() ? 0 : it->second;
            EXPECT_EQ(BigInt(got), oracle::kostka(mu, orbit.rows.parts()));
            if (level <= kOracleMaxDegree && level == n) EXPECT_EQ(BigInt(got), multiplicity_oracle(lambda, mu, n));
          }
        }
      }
    }
}

TEST(AdaptedChain, LabelsAreUniqueAndChained) {
  const auto chain = build_chain(P({3, 2, 1}), Normalization::leading_one);
  for (int level = 1; level <= 6; ++level) {
    std::set<std::tuple<std::vector<int>, int, std::vector<int>>> seen;
    for (const auto& l : chain.labels(level)) {
      EXPECT_EQ(l.tableau.n(), level);
      EXPECT_EQ(l.tableau.shape(), l.shape);
      EXPECT_TRUE(seen.insert({l.orbit.assignment, l.copy, l.tableau.row_word()}).second);
    }
  }
}

TEST(AdaptedChain, LeadingOneVectors) {
  const auto chain = build_chain(P({3, 2}), Normalization::leading_one);
  for (int level = 1; level <= 5; ++level)
    for (const auto& v : chain.basis_exact(level)) {
      bool nonzero = false;
      for (const auto& x : v.coords) nonzero = nonzero || sgn(x) != 0;
      EXPECT_TRUE(nonzero);
    }
}

TEST(AdaptedChain, OrthonormalBasisIsOrthonormal) {
  for (const auto& lambda : {P({3, 2}), P({2, 2, 1}), P({4, 1, 1})}) {
    const auto chain = build_chain(lambda, Normalization::orthonormal);
    for (int level = 1; level <= lambda.size(); ++level) {
      const auto basis = chain.basis(level);
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a; b < basis.size(); ++b) {
          double dot = 0;
          for (std::size_t r = 0; r < chain.size(); ++r) dot += basis[a].coords[r] * basis[b].coords[r];
          EXPECT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-10) << lambda.to_string() << " level " << level;
        }
    }
  }
}

class AdaptedAllShapes : public ::testing::TestWithParam<int> {};

TEST_P(AdaptedAllShapes, GeneratorsActAsYoungMatrices) {
  const int n = GetParam();
  for (const auto& lambda : partitions_of(n))
    for (auto mode : {Normalization::leading_one, Normalization::orthonormal}) {
      const auto chain = build_chain(lambda, mode);
      for (int level = 1; level <= n; ++level) {
        const auto report = verify_adapted(chain, level);
        EXPECT_TRUE(report.ok()) << lambda.to_string() << " " << to_string(mode) << " level " << level << ": "
                                 << (report.failures.empty() ? "" : report.failures.front());
      }
    }
}

INSTANTIATE_TEST_SUITE_P(SmallN, AdaptedAllShapes, ::testing::Values(2, 3, 4, 5, 6));

TEST(Normalization, ParseAndPrint) {
  EXPECT_EQ(parse_normalization("leading-one"), Normalization::leading_one);
  EXPECT_EQ(parse_normalization("orthonormal"), Normalization::orthonormal);
  EXPECT_EQ(to_string(Normalization::orthonormal), "orthonormal");
  EXPECT_THROW(parse_normalization("unit"), std::invalid_argument);
}

TEST(AdaptedChain, ExactFactorsUnavailableInOrthonormalMode) {
  const auto chain = build_chain(P({2, 1}), Normalization::orthonormal);
  EXPECT_ANY_THROW(chain.exact_factor(2));
  EXPECT_NO_THROW(chain.factor(2));
  EXPECT_ANY_THROW(chain.factor(1));
}
