#include "permfft/adapted_basis.hpp"

#include <cmath>
#include <span>
#include <tuple>
#include <type_traits>

#include "local_transform.hpp"

namespace permfft {

std::string to_string(Normalization n) {
  return n == Normalization::leading_one ? "leading-one" : "orthonormal";
}

Normalization parse_normalization(const std::string& text) {
  if (text == "leading-one") return Normalization::leading_one;
  if (text == "orthonormal") return Normalization::orthonormal;
  throw std::invalid_argument("unknown normalization: " + text);
}

namespace {

template <class T>
void assemble_level(const std::vector<Orbit>& orbits, int j, std::vector<BasisLabel>& labels,
                    std::vector<FrequencySpaceRecord>& records, std::vector<Triplet<T>>& forward,
                    std::vector<Triplet<T>>& backward) {
  for (const auto& orbit : orbits) {
    const std::size_t start = orbit.members.front();
    if (orbit.members.back() - start + 1 != orbit.members.size()) {
      throw std::logic_error("orbit is not contiguous in the enumeration");
    }
    const auto local = detail::local_transform<T>(orbit.rows.parts());
    if (local->dim != orbit.members.size()) {
      throw ConstructionError("local block size differs from orbit size at level " + std::to_string(j));
    }
    for (const auto& lab : local->top) {
      const Partition& mu = local->shapes[static_cast<std::size_t>(lab.shape)];
      labels.push_back({orbit.key, mu, lab.copy,
                        standard_tableaux(mu)[static_cast<std::size_t>(lab.tableau)]});
    }
    for (std::size_t k = 0; k < local->shapes.size(); ++k) {
      records.push_back({j, orbit.key, local->shapes[k], local->multiplicity[k]});
    }
    for (std::size_t col = 0; col < local->dim; ++col) {
      for (const auto& [row, v] : local->forward_cols[col]) forward.push_back({start + row, start + col, v});
      for (const auto& [row, v] : local->backward_cols[col]) backward.push_back({start + row, start + col, v});
    }
  }
}

template <class T>
std::vector<T> apply_chain_down(const AdaptedChain& chain, int level, std::vector<T> v) {
  for (int j = level; j >= 2; --j) {
    if constexpr (std::is_same_v<T, Rational>) {
      v = chain.exact_inverse_factor(j).multiply(std::span<const T>(v));
    } else {
      v = chain.inverse_factor(j).multiply(std::span<const T>(v));
    }
  }
  return v;
}

template <class T>
std::vector<LabeledBasisVector<T>> materialize(const AdaptedChain& chain, int level) {
  const auto& labels = chain.labels(level);
  std::vector<LabeledBasisVector<T>> out;
  out.reserve(labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k) {
    std::vector<T> e(chain.size(), T(0));
    e[k] = T(1);
    out.push_back({labels[k], apply_chain_down(chain, level, std::move(e))});
  }
  return out;
}

template <class T>
AdaptedReport check_blocks(const AdaptedChain& chain, int level) {
  constexpr bool exact = ScalarTraits<T>::exact;
  AdaptedReport report{level, 0, {}};
  const auto& labels = chain.labels(level);
  const auto& space = chain.space();
  const auto basis = materialize<T>(chain, level);

  std::map<std::tuple<std::vector<int>, Partition, int>, std::size_t> block_start;
  std::vector<std::size_t> tab_idx(labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k) {
    tab_idx[k] = tableau_index(labels[k].shape, labels[k].tableau.row_word());
    block_start.try_emplace({labels[k].orbit.assignment, labels[k].shape, labels[k].copy}, k - tab_idx[k]);
  }

  auto fail = [&](std::string msg) {
    if (report.failures.size() < 25) report.failures.push_back(std::move(msg));
  };

  for (int i = 1; i < level; ++i) {
    ++report.generators_checked;
    const auto sigma = Permutation::adjacent(chain.n(), i);
    std::vector<std::size_t> image(space.size());
    {
      std::vector<int> word(static_cast<std::size_t>(chain.n()));
      for (std::size_t x = 0; x < space.size(); ++x) {
        for (int p = 1; p <= chain.n(); ++p) word[static_cast<std::size_t>(sigma(p) - 1)] = space.row_of(x, p);
        image[x] = space.index_of_word(word);
      }
    }
    std::map<Partition, DenseMatrix<T>> rho;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      std::vector<T> moved(space.size(), T(0));
      for (std::size_t x = 0; x < space.size(); ++x) moved[image[x]] = basis[k].coords[x];
      for (int j = 2; j <= level; ++j) {
        if constexpr (exact) {
          moved = chain.exact_factor(j).multiply(std::span<const T>(moved));
        } else {
          moved = chain.factor(j).multiply(std::span<const T>(moved));
        }
      }
      const Partition& mu = labels[k].shape;
      auto it = rho.find(mu);
      if (it == rho.end()) {
        if constexpr (exact) {
          it = rho.emplace(mu, seminormal_matrix(mu, i)).first;
        } else {
          it = rho.emplace(mu, orthogonal_matrix(mu, i)).first;
        }
      }
      const std::size_t base = block_start.at({labels[k].orbit.assignment, mu, labels[k].copy});
      const std::size_t f = it->second.rows();
      for (std::size_t r = 0; r < moved.size(); ++r) {
        T expected = T(0);
        if (r >= base && r < base + f) expected = it->second(r - base, tab_idx[k]);
        bool equal;
        if constexpr (exact) {
          equal = moved[r] == expected;
        } else {
          equal = std::abs(moved[r] - expected) <= 1e-9;
        }
        if (!equal) {
          fail("s_" + std::to_string(i) + " maps basis vector " + std::to_string(k) + " (" + mu.to_string() +
               " copy " + std::to_string(labels[k].copy) + ") to coordinate " + std::to_string(r) + " = " +
               (exact ? to_string(Rational(moved[r])) : std::to_string(to_double(moved[r]))) + ", expected " +
               (exact ? to_string(Rational(expected)) : std::to_string(to_double(expected))));
        }
      }
    }
  }
  return report;
}

}  // namespace

AdaptedChain::AdaptedChain(Partition lambda, Normalization normalization)
    : normalization_(normalization), space_(std::make_shared<TabloidSpace>(std::move(lambda))) {
  const int n = space_->n();
  for (int j = 1; j <= n; ++j) orbits_.push_back(orbits_under(*space_, j));

  std::vector<BasisLabel> first;
  const Partition one({1});
  const StandardTableau single(one, {0});
  for (const auto& orbit : orbits_[0]) {
    first.push_back({orbit.key, one, 0, single});
    records_.push_back({1, orbit.key, one, 1});
  }
  labels_.push_back(std::move(first));

  for (int j = 2; j <= n; ++j) {
    std::vector<BasisLabel> labels;
    labels.reserve(space_->size());
    if (exact()) {
      std::vector<Triplet<Rational>> fwd, bwd;
      assemble_level<Rational>(orbits_[static_cast<std::size_t>(j - 1)], j, labels, records_, fwd, bwd);
      exact_forward_.emplace_back(size(), size(), std::move(fwd));
      exact_backward_.emplace_back(size(), size(), std::move(bwd));
      forward_.push_back(exact_forward_.back().map<double>([](const Rational& v) { return v.get_d(); }));
      backward_.push_back(exact_backward_.back().map<double>([](const Rational& v) { return v.get_d(); }));
    } else {
      std::vector<Triplet<double>> fwd, bwd;
      assemble_level<double>(orbits_[static_cast<std::size_t>(j - 1)], j, labels, records_, fwd, bwd);
      forward_.emplace_back(size(), size(), std::move(fwd));
      backward_.emplace_back(size(), size(), std::move(bwd));
    }
    labels_.push_back(std::move(labels));
  }
}

void AdaptedChain::check_level(int j, int lowest) const {
  if (j < lowest || j > n()) {
    throw std::out_of_range("level " + std::to_string(j) + " outside " + std::to_string(lowest) + ".." +
                            std::to_string(n()));
  }
}

const std::vector<BasisLabel>& AdaptedChain::labels(int level) const {
  check_level(level, 1);
  return labels_[static_cast<std::size_t>(level - 1)];
}

const std::vector<Orbit>& AdaptedChain::orbits(int level) const {
  check_level(level, 1);
  return orbits_[static_cast<std::size_t>(level - 1)];
}

const SparseMatrix<Rational>& AdaptedChain::exact_factor(int j) const {
  check_level(j, 2);
  if (!exact()) throw std::logic_error("orthonormal chains have no exact factors");
  return exact_forward_[static_cast<std::size_t>(j - 2)];
}

const SparseMatrix<Rational>& AdaptedChain::exact_inverse_factor(int j) const {
  check_level(j, 2);
  if (!exact()) throw std::logic_error("orthonormal chains have no exact factors");
  return exact_backward_[static_cast<std::size_t>(j - 2)];
}

const SparseMatrix<double>& AdaptedChain::factor(int j) const {
  check_level(j, 2);
  return forward_[static_cast<std::size_t>(j - 2)];
}

const SparseMatrix<double>& AdaptedChain::inverse_factor(int j) const {
  check_level(j, 2);
  return backward_[static_cast<std::size_t>(j - 2)];
}

std::vector<LabeledBasisVector<Rational>> AdaptedChain::basis_exact(int level) const {
  check_level(level, 1);
  if (!exact()) throw std::logic_error("orthonormal chains have no exact basis");
  return materialize<Rational>(*this, level);
}

std::vector<LabeledBasisVector<double>> AdaptedChain::basis(int level) const {
  check_level(level, 1);
  return materialize<double>(*this, level);
}

AdaptedChain build_chain(const Partition& lambda, Normalization normalization) {
  return AdaptedChain(lambda, normalization);
}

std::map<std::pair<OrbitKey, Partition>, int> frequency_dimensions(
    const std::vector<FrequencySpaceRecord>& records, int level) {
  std::map<std::pair<OrbitKey, Partition>, int> out;
  for (const auto& r : records)
    if (r.level == level) out[{r.orbit, r.shape}] += r.dimension;
  return out;
}

AdaptedReport verify_adapted(const AdaptedChain& chain, int level) {
  if (level < 1 || level > chain.n()) throw std::out_of_range("verify_adapted: level out of range");
  return chain.exact() ? check_blocks<Rational>(chain, level) : check_blocks<double>(chain, level);
}

}  // namespace permfft
