#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "permfft/adapted_basis.hpp"
#include "permfft/linalg.hpp"
#include "permfft/sparse.hpp"

namespace permfft {

/// Factored transform C(B_n, B_1) = C(B_n, B_{n-1}) ... C(B_2, B_1).
/// factors[i] holds C(B_{i+2}, B_{i+1}); inverse factors run the other way.
struct TransformPlan {
  Partition shape;
  std::size_t size = 0;
  Normalization normalization = Normalization::leading_one;
  std::vector<BasisLabel> labels;  // B_n

  std::vector<SparseMatrix<Rational>> exact_factors;  // leading-one only
  std::vector<SparseMatrix<Rational>> exact_inverse_factors;
  std::vector<SparseMatrix<double>> factors;
  std::vector<SparseMatrix<double>> inverse_factors;

  bool exact() const { return normalization == Normalization::leading_one; }
  int n() const { return shape.size(); }
  std::vector<std::size_t> nnz() const;
  std::size_t total_nnz() const;
};

TransformPlan plan(const Partition& lambda, Normalization normalization = Normalization::leading_one);
TransformPlan plan_from_chain(const AdaptedChain& chain);

/// Coefficients of one isotypic copy: all B_n vectors with the same shape and copy.
template <class T>
struct SpectrumComponent {
  Partition shape;
  int copy = 0;
  std::vector<std::size_t> positions;  // into the flat coefficient list
  std::vector<T> coefficients;
  T energy = T(0);
};

template <class T>
struct BasicSpectrum {
  std::vector<T> coefficients;
  std::vector<SpectrumComponent<T>> components;

  T total_energy() const {
    T sum = T(0);
    for (const auto& c : components) sum += c.energy;
    return sum;
  }
};

using Spectrum = BasicSpectrum<double>;
using ExactSpectrum = BasicSpectrum<Rational>;

/// Groups flat coefficients by (shape, copy) in label order.
Spectrum make_spectrum(const std::vector<BasisLabel>& labels, std::vector<double> coefficients);
ExactSpectrum make_spectrum(const std::vector<BasisLabel>& labels, std::vector<Rational> coefficients);

/// Throws std::domain_error when f has the wrong length. Call as
/// permfft::apply: with std containers, ADL also finds std::apply.
std::pair<Spectrum, OpCount> apply(const TransformPlan& plan, std::span<const double> f);
std::pair<ExactSpectrum, OpCount> apply_exact(const TransformPlan& plan, std::span<const Rational> f);

std::vector<double> inverse(const TransformPlan& plan, const Spectrum& spectrum);
std::vector<Rational> inverse_exact(const TransformPlan& plan, const ExactSpectrum& spectrum);

/// The single dense matrix C(B_n, B_1) used by the naive path.
struct DenseTransform {
  DenseMatrix<double> matrix;
  std::vector<BasisLabel> labels;
};

/// Multiplies the factors out. Entries below 1e-12 times the largest entry
/// are stored as exact zeros so the naive count sees structural zeros.
DenseTransform dense_transform(const TransformPlan& plan);

std::pair<Spectrum, OpCount> apply_naive(const DenseTransform& dense, std::span<const double> f);
std::pair<Spectrum, OpCount> apply_naive(const TransformPlan& plan, std::span<const double> f);

}  // namespace permfft
