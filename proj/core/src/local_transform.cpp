#include "local_transform.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>
#include <unordered_map>

#include <Eigen/Eigenvalues>

#include "permfft/linalg.hpp"
#include "permfft/symmetric_group.hpp"

namespace permfft::detail {

namespace {

using Index = std::uint32_t;

std::string composition_name(const std::vector<int>& beta) {
  std::string out = "(";
  for (std::size_t i = 0; i < beta.size(); ++i) out += (i ? "," : "") + std::to_string(beta[i]);
  return out + ")";
}

int box_content(const Partition& mu, int row) { return mu[static_cast<std::size_t>(row)] - 1 - row; }

template <class T>
using SparseVec = std::vector<std::pair<Index, T>>;

template <class T>
std::shared_ptr<const LocalTransform<T>> build(const std::vector<int>& beta);

template <class T>
struct Scratch {
  std::vector<T> values;
  std::vector<char> marked;
  std::vector<Index> touched;

  explicit Scratch(std::size_t n) : values(n, T(0)), marked(n, 0) {}

  void add(Index i, const T& v) {
    if (!marked[i]) {
      marked[i] = 1;
      touched.push_back(i);
    }
    values[i] += v;
  }

  SparseVec<T> take() {
    SparseVec<T> out;
    std::sort(touched.begin(), touched.end());
    for (Index i : touched) {
      if (!ScalarTraits<T>::is_zero(values[i])) out.emplace_back(i, values[i]);
      values[i] = T(0);
      marked[i] = 0;
    }
    touched.clear();
    return out;
  }
};

// Builds the level-m block for one composition from its children.
template <class T>
class Builder {
 public:
  explicit Builder(LocalTransform<T>& out) : L_(out), stage1_(out.dim), stage2_(out.dim) {}

  void run();

 private:
  // Rows of the composition after removing a box from row `removed`.
  int child_row(int removed, int parent) const {
    return (L_.beta[static_cast<std::size_t>(removed)] == 1 && parent > removed) ? parent - 1 : parent;
  }
  int parent_row(int removed, int child) const {
    return (L_.beta[static_cast<std::size_t>(removed)] == 1 && child >= removed) ? child + 1 : child;
  }

  std::size_t sub_index(int a, const Partition& nu, int r, std::size_t t) const {
    const auto& child = *L_.children[static_cast<std::size_t>(a)];
    return L_.sub_offset[static_cast<std::size_t>(a)] + child.top_index(nu, r, t);
  }

  SparseVec<T> apply_s(const SparseVec<T>& in);
  SparseVec<T> apply_x(const SparseVec<T>& in);

  std::vector<std::vector<T>> lead_vectors(std::size_t nu, int content);

  LocalTransform<T>& L_;
  Scratch<T> stage1_;
  Scratch<T> stage2_;
  std::vector<int> sub_content_;

  // Multiplicity spaces W_nu = span{(a, r)}.
  std::vector<Partition> nus_;
  std::vector<std::vector<std::pair<int, int>>> w_;
  std::vector<DenseMatrix<T>> a_;
  std::map<std::size_t, std::pair<Eigen::VectorXd, Eigen::MatrixXd>> eigen_;
};

// s_{m-1} in level-(m-1) coordinates: go down to level m-2, exchange the
// blocks (m in a, m-1 in b) <-> (m in b, m-1 in a), and come back up.
template <class T>
SparseVec<T> Builder<T>::apply_s(const SparseVec<T>& in) {
  for (const auto& [idx, v] : in) {
    const int a = L_.sub_row[idx];
    const auto& child = *L_.children[static_cast<std::size_t>(a)];
    const std::size_t p = idx - L_.sub_offset[static_cast<std::size_t>(a)];
    for (const auto& [q, bv] : child.backward_cols[p]) {
      const int b_child = child.sub_row[q];
      const std::size_t u = q - child.sub_offset[static_cast<std::size_t>(b_child)];
      const int b = parent_row(a, b_child);
      const auto& target = *L_.children[static_cast<std::size_t>(b)];
      const std::size_t q2 = target.sub_offset[static_cast<std::size_t>(child_row(b, a))] + u;
      stage1_.add(static_cast<Index>(L_.sub_offset[static_cast<std::size_t>(b)] + q2), v * bv);
    }
  }
  for (const auto& [g, v] : stage1_.take()) {
    const int b = L_.sub_row[g];
    const auto& target = *L_.children[static_cast<std::size_t>(b)];
    const std::size_t base = L_.sub_offset[static_cast<std::size_t>(b)];
    for (const auto& [p, fv] : target.forward_cols[g - base]) {
      stage2_.add(static_cast<Index>(base + p), v * fv);
    }
  }
  return stage2_.take();
}

// X_m = s + s X_{m-1} s, with X_{m-1} diagonal in level-(m-1) coordinates.
template <class T>
SparseVec<T> Builder<T>::apply_x(const SparseVec<T>& in) {
  SparseVec<T> first = apply_s(in);
  SparseVec<T> scaled;
  for (const auto& [i, v] : first) {
    if (sub_content_[i] != 0) scaled.emplace_back(i, v * T(sub_content_[i]));
  }
  SparseVec<T> second = apply_s(scaled);
  for (const auto& [i, v] : first) stage2_.add(i, v);
  for (const auto& [i, v] : second) stage2_.add(i, v);
  return stage2_.take();
}

template <class T>
std::vector<std::vector<T>> Builder<T>::lead_vectors(std::size_t nu, int content) {
  const auto& A = a_[nu];
  const std::size_t w = A.rows();
  if constexpr (ScalarTraits<T>::exact) {
    DenseMatrix<T> shifted = A;
    for (std::size_t i = 0; i < w; ++i) shifted(i, i) -= T(content);
    return echelon_basis(kernel(shifted));
  } else {
    auto it = eigen_.find(nu);
    if (it == eigen_.end()) {
      Eigen::MatrixXd dense(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(w));
      for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < w; ++j)
          dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = A(i, j);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
      if (solver.info() != Eigen::Success) {
        throw ConstructionError("eigensolver failed on block " + nus_[nu].to_string() + " of " +
                                composition_name(L_.beta));
      }
      for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double ev = solver.eigenvalues()(i);
        if (std::abs(ev - std::round(ev)) > 1e-6) {
          throw ConstructionError("non-integral eigenvalue " + std::to_string(ev) + " on block " +
                                  nus_[nu].to_string() + " of " + composition_name(L_.beta));
        }
      }
      it = eigen_.emplace(nu, std::pair{solver.eigenvalues(), solver.eigenvectors()}).first;
    }
    const auto& [values, vectors] = it->second;
    std::vector<std::vector<double>> eig;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      if (std::lround(values(i)) != content) continue;
      std::vector<double> v(w);
      for (std::size_t j = 0; j < w; ++j) v[j] = vectors(static_cast<Eigen::Index>(j), i);
      eig.push_back(std::move(v));
    }
    auto basis = echelon_basis(eig);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t k = 0; k < i; ++k) {
        double dot = 0;
        for (std::size_t j = 0; j < w; ++j) dot += basis[i][j] * basis[k][j];
        for (std::size_t j = 0; j < w; ++j) basis[i][j] -= dot * basis[k][j];
      }
      double norm = 0;
      for (double x : basis[i]) norm += x * x;
      norm = std::sqrt(norm);
      for (double& x : basis[i]) x /= norm;
    }
    return basis;
  }
}

template <class T>
void Builder<T>::run() {
  const int m = L_.m;
  const auto rows = L_.beta.size();
  const std::string where = composition_name(L_.beta);

  sub_content_.resize(L_.dim);
  for (std::size_t a = 0; a < rows; ++a) {
    const auto& child = *L_.children[a];
    for (std::size_t k = 0; k < child.top.size(); ++k) {
      const auto& lab = child.top[k];
      const auto& tab = standard_tableaux(child.shapes[static_cast<std::size_t>(lab.shape)])
          [static_cast<std::size_t>(lab.tableau)];
      sub_content_[L_.sub_offset[a] + k] = tab.content(m - 1);
    }
  }

  // Jucys-Murphy action on each multiplicity space, read at the first tableau.
  std::map<Partition, std::size_t> nu_index;
  for (const auto& nu : partitions_of(m - 1)) {
    std::vector<std::pair<int, int>> w;
    for (std::size_t a = 0; a < rows; ++a) {
      const auto& child = *L_.children[a];
      auto it = child.shape_index.find(nu);
      if (it == child.shape_index.end()) continue;
      for (int r = 0; r < child.multiplicity[static_cast<std::size_t>(it->second)]; ++r)
        w.emplace_back(static_cast<int>(a), r);
    }
    if (w.empty()) continue;
    std::unordered_map<std::size_t, std::size_t> position;
    for (std::size_t i = 0; i < w.size(); ++i) position[sub_index(w[i].first, nu, w[i].second, 0)] = i;
    DenseMatrix<T> A(w.size(), w.size());
    for (std::size_t col = 0; col < w.size(); ++col) {
      SparseVec<T> e{{static_cast<Index>(sub_index(w[col].first, nu, w[col].second, 0)), T(1)}};
      for (const auto& [i, v] : apply_x(e)) {
        auto p = position.find(i);
        if (p == position.end()) {
          throw ConstructionError("Jucys-Murphy action leaves block " + nu.to_string() + " of " + where);
        }
        A(p->second, col) = v;
      }
    }
    nu_index.emplace(nu, nus_.size());
    nus_.push_back(nu);
    w_.push_back(std::move(w));
    a_.push_back(std::move(A));
  }

  // coeffs[mu][copy][nu] = coordinates of that copy's nu-part in W_nu.
  struct Copies {
    Partition mu;
    std::vector<std::map<std::size_t, std::vector<T>>> parts;
  };
  std::vector<Copies> found;
  std::size_t covered = 0;
  for (const auto& mu : partitions_of(m)) {
    const int x0 = mu.removable_rows().front();
    const Partition nu0 = mu.remove_box(x0);
    auto it0 = nu_index.find(nu0);
    if (it0 == nu_index.end()) continue;
    const auto leads = lead_vectors(it0->second, box_content(mu, x0));
    if (leads.empty()) continue;
    Copies copies{mu, {}};
    for (const auto& lead : leads) {
      std::map<std::size_t, std::vector<T>> parts;
      parts[it0->second] = lead;
      for (int y : mu.removable_rows()) {
        if (y == x0) continue;
        const int d = box_content(mu, x0) - box_content(mu, y);
        const Partition nu_y = mu.remove_box(y);
        auto ity = nu_index.find(nu_y);
        if (ity == nu_index.end()) {
          throw ConstructionError("missing multiplicity space " + nu_y.to_string() + " in " + where);
        }
        // T has m at x0 and m-1 at y; s_{m-1} T swaps them.
        std::vector<int> base = standard_tableaux(nu0.remove_box(y)).front().row_word();
        std::vector<int> t = base, t_swapped = base;
        t.push_back(y);
        t_swapped.push_back(x0);
        const std::size_t ti = tableau_index(nu0, t);
        const std::size_t ts = tableau_index(nu_y, t_swapped);

        SparseVec<T> w;
        const auto& w0 = w_[it0->second];
        for (std::size_t i = 0; i < w0.size(); ++i) {
          if (ScalarTraits<T>::is_zero(lead[i])) continue;
          w.emplace_back(static_cast<Index>(sub_index(w0[i].first, nu0, w0[i].second, ti)), lead[i]);
        }
        std::sort(w.begin(), w.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        const T inv_d = T(1) / T(d);
        T scale = T(1);
        if constexpr (!ScalarTraits<T>::exact) scale = 1.0 / std::sqrt(1.0 - 1.0 / (double(d) * d));
        for (const auto& [i, v] : apply_s(w)) stage2_.add(i, v);
        for (const auto& [i, v] : w) stage2_.add(i, -v * inv_d);
        const auto z = stage2_.take();

        const auto& wy = w_[ity->second];
        std::unordered_map<std::size_t, std::size_t> position;
        for (std::size_t i = 0; i < wy.size(); ++i) position[sub_index(wy[i].first, nu_y, wy[i].second, ts)] = i;
        std::vector<T> coeff(wy.size(), T(0));
        for (const auto& [i, v] : z) {
          auto p = position.find(i);
          if (p == position.end()) {
            throw ConstructionError("seminormal link leaves block " + nu_y.to_string() + " of " + where);
          }
          coeff[p->second] = v * scale;
        }
        parts[ity->second] = std::move(coeff);
      }
      copies.parts.push_back(std::move(parts));
    }
    covered += leads.size() * to_u64(dim_specht(mu));
    found.push_back(std::move(copies));
  }
  if (covered != L_.dim) {
    throw ConstructionError("eigenspaces of " + where + " cover " + std::to_string(covered) + " of " +
                            std::to_string(L_.dim) + " dimensions");
  }

  for (auto& c : found) {
    L_.shape_index.emplace(c.mu, static_cast<int>(L_.shapes.size()));
    L_.shapes.push_back(c.mu);
    L_.multiplicity.push_back(static_cast<int>(c.parts.size()));
  }
  std::size_t offset = 0;
  for (std::size_t k = 0; k < L_.shapes.size(); ++k) {
    L_.shape_offset.push_back(offset);
    const auto f = to_u64(dim_specht(L_.shapes[k]));
    for (int s = 0; s < L_.multiplicity[k]; ++s)
      for (std::size_t t = 0; t < f; ++t)
        L_.top.push_back({static_cast<int>(k), s, static_cast<int>(t)});
    offset += static_cast<std::size_t>(L_.multiplicity[k]) * f;
  }

  L_.forward_cols.assign(L_.dim, {});
  L_.backward_cols.assign(L_.dim, {});
  for (std::size_t nu = 0; nu < nus_.size(); ++nu) {
    const Partition& shape = nus_[nu];
    const auto& w = w_[nu];
    struct Col {
      std::size_t shape;
      int copy;
      int box_row;
    };
    std::vector<Col> cols;
    DenseMatrix<T> P(w.size(), w.size());
    for (std::size_t k = 0; k < found.size(); ++k) {
      int box_row = -1;
      for (int row : shape.addable_rows())
        if (shape.add_box(row) == found[k].mu) box_row = row;
      if (box_row < 0) continue;
      for (std::size_t s = 0; s < found[k].parts.size(); ++s) {
        if (cols.size() == w.size()) {
          throw ConstructionError("too many copies restrict to " + shape.to_string() + " in " + where);
        }
        const auto& coeff = found[k].parts[s].at(nu);
        for (std::size_t i = 0; i < w.size(); ++i) P(i, cols.size()) = coeff[i];
        cols.push_back({k, static_cast<int>(s), box_row});
      }
    }
    if (cols.size() != w.size()) {
      throw ConstructionError("copies do not span block " + shape.to_string() + " of " + where);
    }
    DenseMatrix<T> Q;
    if constexpr (ScalarTraits<T>::exact) {
      try {
        Q = inverse(P);
      } catch (const std::runtime_error&) {
        throw ConstructionError("singular change of basis on block " + shape.to_string() + " of " + where);
      }
    } else {
      Q = P.transpose();
    }
    const auto& tabs = standard_tableaux(shape);
    for (std::size_t t = 0; t < tabs.size(); ++t) {
      std::vector<std::size_t> subs(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) subs[i] = sub_index(w[i].first, shape, w[i].second, t);
      std::vector<int> word = tabs[t].row_word();
      word.push_back(0);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const Partition& mu = L_.shapes[cols[c].shape];
        word.back() = cols[c].box_row;
        const std::size_t top = L_.top_index(mu, cols[c].copy, tableau_index(mu, word));
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (!ScalarTraits<T>::is_zero(P(i, c)))
            L_.backward_cols[top].emplace_back(static_cast<Index>(subs[i]), P(i, c));
          if (!ScalarTraits<T>::is_zero(Q(c, i)))
            L_.forward_cols[subs[i]].emplace_back(static_cast<Index>(top), Q(c, i));
        }
      }
    }
  }
  auto by_row = [](const auto& l, const auto& r) { return l.first < r.first; };
  for (auto& col : L_.forward_cols) std::sort(col.begin(), col.end(), by_row);
  for (auto& col : L_.backward_cols) std::sort(col.begin(), col.end(), by_row);
}

template <class T>
std::shared_ptr<const LocalTransform<T>> build(const std::vector<int>& beta) {
  auto L = std::make_shared<LocalTransform<T>>();
  L->beta = beta;
  for (int b : beta) L->m += b;
  const int m = L->m;

  if (m <= 1) {
    const Partition mu = m == 0 ? Partition() : Partition({1});
    L->shapes = {mu};
    L->multiplicity = {1};
    L->shape_offset = {0};
    L->shape_index.emplace(mu, 0);
    L->top = {{0, 0, 0}};
    L->dim = 1;
    L->sub_offset = {0, 1};
    L->sub_row = {0};
    if (m == 1) L->children = {local_transform<T>({})};
    L->forward_cols = {{{0, T(1)}}};
    L->backward_cols = {{{0, T(1)}}};
    return L;
  }

  L->sub_offset.push_back(0);
  for (std::size_t a = 0; a < beta.size(); ++a) {
    std::vector<int> child = beta;
    --child[a];
    L->children.push_back(local_transform<T>(child));
    L->sub_offset.push_back(L->sub_offset.back() + L->children.back()->dim);
    for (std::size_t k = 0; k < L->children.back()->dim; ++k) L->sub_row.push_back(static_cast<int>(a));
  }
  L->dim = L->sub_offset.back();
  Builder<T>(*L).run();
  return L;
}

}  // namespace

template <class T>
std::size_t LocalTransform<T>::top_index(const Partition& mu, int copy, std::size_t tableau) const {
  auto it = shape_index.find(mu);
  if (it == shape_index.end()) return npos;
  const auto k = static_cast<std::size_t>(it->second);
  return shape_offset[k] + static_cast<std::size_t>(copy) * standard_tableaux(mu).size() + tableau;
}

std::vector<int> compress(const std::vector<int>& composition) {
  std::vector<int> out;
  for (int p : composition)
    if (p > 0) out.push_back(p);
  return out;
}

template <class T>
std::shared_ptr<const LocalTransform<T>> local_transform(const std::vector<int>& composition) {
  static std::recursive_mutex mutex;
  static std::map<std::vector<int>, std::shared_ptr<const LocalTransform<T>>> cache;
  const auto beta = compress(composition);
  std::lock_guard lock(mutex);
  auto it = cache.find(beta);
  if (it != cache.end()) return it->second;
  auto built = build<T>(beta);
  cache.emplace(beta, built);
  return built;
}

template struct LocalTransform<Rational>;
template struct LocalTransform<double>;
template std::shared_ptr<const LocalTransform<Rational>> local_transform<Rational>(const std::vector<int>&);
template std::shared_ptr<const LocalTransform<double>> local_transform<double>(const std::vector<int>&);

}  // namespace permfft::detail
