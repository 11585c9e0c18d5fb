#include "permfft/transform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace permfft {

namespace {

double square(double v) { return v * v; }
Rational square(const Rational& v) { return v * v; }

template <class T>
BasicSpectrum<T> group(const std::vector<BasisLabel>& labels, std::vector<T> coefficients) {
  if (labels.size() != coefficients.size()) throw std::domain_error("spectrum length differs from label count");
  BasicSpectrum<T> out;
  std::map<std::pair<Partition, int>, std::size_t> slot;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = slot.try_emplace({labels[i].shape, labels[i].copy}, out.components.size());
    if (fresh) out.components.push_back({labels[i].shape, labels[i].copy, {}, {}, T(0)});
    auto& c = out.components[it->second];
    c.positions.push_back(i);
    c.coefficients.push_back(coefficients[i]);
    c.energy += square(coefficients[i]);
  }
  out.coefficients = std::move(coefficients);
  return out;
}

void check_length(const TransformPlan& plan, std::size_t n) {
  if (n != plan.size) {
    throw std::domain_error("input has length " + std::to_string(n) + ", plan expects " + std::to_string(plan.size));
  }
}

}  // namespace

std::vector<std::size_t> TransformPlan::nnz() const {
  std::vector<std::size_t> out;
  for (const auto& f : factors) out.push_back(f.nnz());
  return out;
}

std::size_t TransformPlan::total_nnz() const {
  std::size_t sum = 0;
  for (const auto& f : factors) sum += f.nnz();
  return sum;
}

TransformPlan plan_from_chain(const AdaptedChain& chain) {
  TransformPlan p;
  p.shape = chain.shape();
  p.size = chain.size();
  p.normalization = chain.normalization();
  p.labels = chain.labels(chain.n());
  for (int j = 2; j <= chain.n(); ++j) {
    if (chain.exact()) {
      p.exact_factors.push_back(chain.exact_factor(j));
      p.exact_inverse_factors.push_back(chain.exact_inverse_factor(j));
    }
    p.factors.push_back(chain.factor(j));
    p.inverse_factors.push_back(chain.inverse_factor(j));
  }
  return p;
}

TransformPlan plan(const Partition& lambda, Normalization normalization) {
  return plan_from_chain(build_chain(lambda, normalization));
}

Spectrum make_spectrum(const std::vector<BasisLabel>& labels, std::vector<double> coefficients) {
  return group(labels, std::move(coefficients));
}

ExactSpectrum make_spectrum(const std::vector<BasisLabel>& labels, std::vector<Rational> coefficients) {
  return group(labels, std::move(coefficients));
}

std::pair<Spectrum, OpCount> apply(const TransformPlan& plan, std::span<const double> f) {
  check_length(plan, f.size());
  OpCount ops;
  std::vector<double> v(f.begin(), f.end());
  for (const auto& factor : plan.factors) v = factor.multiply(std::span<const double>(v), &ops);
  return {make_spectrum(plan.labels, std::move(v)), ops};
}

std::pair<ExactSpectrum, OpCount> apply_exact(const TransformPlan& plan, std::span<const Rational> f) {
  if (!plan.exact()) throw std::logic_error("exact application needs a leading-one plan");
  check_length(plan, f.size());
  OpCount ops;
  std::vector<Rational> v(f.begin(), f.end());
  for (const auto& factor : plan.exact_factors) v = factor.multiply(std::span<const Rational>(v), &ops);
  return {make_spectrum(plan.labels, std::move(v)), ops};
}

std::vector<double> inverse(const TransformPlan& plan, const Spectrum& spectrum) {
  check_length(plan, spectrum.coefficients.size());
  std::vector<double> v = spectrum.coefficients;
  for (auto it = plan.inverse_factors.rbegin(); it != plan.inverse_factors.rend(); ++it)
    v = it->multiply(std::span<const double>(v));
  return v;
}

std::vector<Rational> inverse_exact(const TransformPlan& plan, const ExactSpectrum& spectrum) {
  if (!plan.exact()) throw std::logic_error("exact inversion needs a leading-one plan");
  check_length(plan, spectrum.coefficients.size());
  std::vector<Rational> v = spectrum.coefficients;
  for (auto it = plan.exact_inverse_factors.rbegin(); it != plan.exact_inverse_factors.rend(); ++it)
    v = it->multiply(std::span<const Rational>(v));
  return v;
}

DenseTransform dense_transform(const TransformPlan& plan) {
  const std::size_t m = plan.size;
  DenseMatrix<double> dense(m, m);
  double largest = 0;
  for (std::size_t col = 0; col < m; ++col) {
    std::vector<double> v(m, 0.0);
    v[col] = 1.0;
    for (const auto& factor : plan.factors) v = factor.multiply(std::span<const double>(v));
    for (std::size_t row = 0; row < m; ++row) {
      dense(row, col) = v[row];
      largest = std::max(largest, std::abs(v[row]));
    }
  }
  const double cutoff = 1e-12 * largest;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      if (std::abs(dense(r, c)) < cutoff) dense(r, c) = 0.0;
  return {std::move(dense), plan.labels};
}

std::pair<Spectrum, OpCount> apply_naive(const DenseTransform& dense, std::span<const double> f) {
  const std::size_t m = dense.matrix.rows();
  if (f.size() != m) throw std::domain_error("input length differs from the dense transform size");
  OpCount ops;
  std::vector<double> out(m, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t terms = 0;
    double acc = 0;
    for (std::size_t c = 0; c < m; ++c) {
      const double a = dense.matrix(r, c);
      if (a == 0.0) continue;
      acc += a * f[c];
      ++terms;
    }
    out[r] = acc;
    if (terms > 0) {
      ops.multiplications += terms;
      ops.additions += terms - 1;
    }
  }
  return {make_spectrum(dense.labels, std::move(out)), ops};
}

std::pair<Spectrum, OpCount> apply_naive(const TransformPlan& plan, std::span<const double> f) {
  check_length(plan, f.size());
  return apply_naive(dense_transform(plan), f);
}

}  // namespace permfft
