#include "permfft/symmetric_group.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "permfft/tabloids.hpp"

namespace permfft {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  if (i < 1 || j < 1 || i > n || j > n) throw std::domain_error("transposition out of range");
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
  return p;
}

Permutation Permutation::adjacent(int n, int i) { return transposition(n, i, i + 1); }

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation out = identity(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cycle = *it;
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || from > n || to < 1 || to > n) throw std::domain_error("cycle entry out of range");
      images[static_cast<std::size_t>(from - 1)] = to;
    }
    out = Permutation(std::move(images)) * out;
  }
  return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (n() != other.n()) throw std::domain_error("composing permutations of different degree");
  std::vector<int> images(images_.size());
  for (int i = 1; i <= n(); ++i) images[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int i = 1; i <= n(); ++i) images[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(images));
}

std::vector<int> Permutation::reduced_word() const {
  // Peel descents off the right: sigma = (sigma s_i) s_i.
  std::vector<int> img = images_;
  std::vector<int> reversed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < img.size(); ++i) {
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);
        reversed.push_back(static_cast<int>(i) + 1);
        changed = true;
      }
    }
  }
  return std::vector<int>(reversed.rbegin(), reversed.rend());
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t p = i; !seen[p]; p = static_cast<std::size_t>(images_[p] - 1)) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

StandardTableau::StandardTableau(Partition shape, std::vector<int> row_word)
    : shape_(std::move(shape)), rows_(std::move(row_word)) {
  if (static_cast<int>(rows_.size()) != shape_.size()) {
    throw std::invalid_argument("tableau word length differs from shape size");
  }
  std::vector<int> filled(static_cast<std::size_t>(shape_.length()), 0);
  for (int r : rows_) {
    if (r < 0 || r >= shape_.length()) throw std::invalid_argument("tableau row out of range");
    auto ru = static_cast<std::size_t>(r);
    if (filled[ru] >= shape_[ru] || (r > 0 && filled[ru - 1] <= filled[ru])) {
      throw std::invalid_argument("word is not a standard filling of the shape");
    }
    ++filled[ru];
  }
}

int StandardTableau::column_of(int letter) const {
  const int row = row_of(letter);
  int col = 0;
  for (int p = 1; p < letter; ++p) col += rows_[static_cast<std::size_t>(p - 1)] == row;
  return col;
}

StandardTableau StandardTableau::restricted() const {
  if (rows_.empty()) throw std::domain_error("cannot restrict the empty tableau");
  std::vector<int> word(rows_.begin(), rows_.end() - 1);
  return StandardTableau(shape_.remove_box(rows_.back()), std::move(word));
}

std::vector<Partition> StandardTableau::chain() const {
  std::vector<Partition> out;
  Partition current;
  for (int r : rows_) {
    current = current.add_box(r);
    out.push_back(current);
  }
  return out;
}

std::vector<std::vector<int>> StandardTableau::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(shape_.length()));
  for (std::size_t p = 0; p < rows_.size(); ++p) out[static_cast<std::size_t>(rows_[p])].push_back(static_cast<int>(p) + 1);
  return out;
}

std::string StandardTableau::to_string() const {
  std::string out;
  for (const auto& row : rows()) {
    if (!out.empty()) out += "/";
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(row[i]);
    }
  }
  return "[" + out + "]";
}

namespace {

struct TableauCatalog {
  std::vector<StandardTableau> list;
  std::unordered_map<std::string, std::size_t> index;
};

std::string row_key(const std::vector<int>& word) {
  std::string key(word.size(), '\0');
  for (std::size_t i = 0; i < word.size(); ++i) key[i] = static_cast<char>(word[i]);
  return key;
}

void generate_tableaux(const Partition& mu, std::vector<std::vector<int>>& out) {
  if (mu.size() == 0) {
    out.emplace_back();
    return;
  }
  // Letter n in the upper rows first gives last-letter order.
  for (int row : mu.removable_rows()) {
    std::vector<std::vector<int>> smaller;
    generate_tableaux(mu.remove_box(row), smaller);
    for (auto& w : smaller) {
      w.push_back(row);
      out.push_back(std::move(w));
    }
  }
}

const TableauCatalog& catalog(const Partition& mu) {
  static std::mutex mutex;
  static std::map<std::vector<int>, std::unique_ptr<TableauCatalog>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[mu.parts()];
  if (!slot) {
    slot = std::make_unique<TableauCatalog>();
    std::vector<std::vector<int>> words;
    generate_tableaux(mu, words);
    slot->list.reserve(words.size());
    for (auto& w : words) {
      slot->index.emplace(row_key(w), slot->list.size());
      slot->list.emplace_back(mu, std::move(w));
    }
  }
  return *slot;
}

// Fills a representation matrix of s_i; `off_diagonal(d)` gives the pair
// (entry (T, s_i T), entry (s_i T, T)) for T earlier in the order.
template <class T, class OffDiagonal>
DenseMatrix<T> generator_matrix(const Partition& mu, int i, OffDiagonal off_diagonal) {
  const int n = mu.size();
  if (i < 1 || i >= n) throw std::domain_error("generator index must satisfy 1 <= i < n");
  const auto& tabs = standard_tableaux(mu);
  DenseMatrix<T> m(tabs.size(), tabs.size());
  for (std::size_t p = 0; p < tabs.size(); ++p) {
    const auto& t = tabs[p];
    const int r1 = t.row_of(i);
    const int r2 = t.row_of(i + 1);
    if (r1 == r2) {
      m(p, p) = T(1);
      continue;
    }
    const int d = t.content(i + 1) - t.content(i);
    if (t.column_of(i) == t.column_of(i + 1)) {
      m(p, p) = T(-1);
      continue;
    }
    m(p, p) = T(1) / T(d);
    if (r2 > r1) continue;  // handled from the earlier tableau
    std::vector<int> word = t.row_word();
    std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(i)]);
    const std::size_t q = tableau_index(mu, word);
    auto [upper, lower] = off_diagonal(d);
    m(p, q) = upper;
    m(q, p) = lower;
  }
  return m;
}

}  // namespace

const std::vector<StandardTableau>& standard_tableaux(const Partition& mu) { return catalog(mu).list; }

std::size_t tableau_index(const Partition& mu, const std::vector<int>& row_word) {
  const auto& cat = catalog(mu);
  auto it = cat.index.find(row_key(row_word));
  if (it == cat.index.end()) throw std::out_of_range("not a standard tableau of " + mu.to_string());
  return it->second;
}

DenseMatrix<Rational> seminormal_matrix(const Partition& mu, int i) {
  return generator_matrix<Rational>(mu, i, [](int d) {
    return std::pair{Rational(Rational(1) - Rational(1, d * d)), Rational(1)};
  });
}

DenseMatrix<double> orthogonal_matrix(const Partition& mu, int i) {
  return generator_matrix<double>(mu, i, [](int d) {
    const double s = std::sqrt(1.0 - 1.0 / (static_cast<double>(d) * d));
    return std::pair{s, s};
  });
}

DenseMatrix<Rational> seminormal_representation(const Partition& mu, const Permutation& sigma) {
  if (sigma.n() != mu.size()) throw std::domain_error("permutation degree differs from |mu|");
  const auto dim = standard_tableaux(mu).size();
  DenseMatrix<Rational> out = DenseMatrix<Rational>::identity(dim);
  for (int i : sigma.reduced_word()) out = out * seminormal_matrix(mu, i);
  return out;
}

BigInt character(const Partition& mu, const Permutation& sigma) {
  const auto rho = seminormal_representation(mu, sigma);
  Rational trace = 0;
  for (std::size_t p = 0; p < rho.rows(); ++p) trace += rho(p, p);
  if (trace.get_den() != 1) throw std::logic_error("non-integral character value");
  return trace.get_num();
}

SparseFactor jm_matrix(int j, const TabloidSpace& space) {
  const int n = space.n();
  if (j < 1 || j > n) throw std::domain_error("jm_matrix requires 1 <= j <= n");
  std::map<std::pair<std::size_t, std::size_t>, int> counts;
  for (std::size_t x = 0; x < space.size(); ++x) {
    std::vector<int> word = space.word(x);
    for (int i = 1; i < j; ++i) {
      std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(j - 1)]);
      ++counts[{space.index_of_word(word), x}];
      std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(j - 1)]);
    }
  }
  std::vector<Triplet<Rational>> entries;
  entries.reserve(counts.size());
  for (const auto& [pos, c] : counts) entries.push_back({pos.first, pos.second, Rational(c)});
  return SparseFactor(space.size(), space.size(), std::move(entries));
}

BigInt multiplicity_oracle(const Partition& lambda, const Partition& mu, int j) {
  if (j > kOracleMaxDegree) {
    throw OracleScaleExceeded("multiplicity oracle scale exceeded: j = " + std::to_string(j) +
                              " > " + std::to_string(kOracleMaxDegree));
  }
  if (mu.size() != j) throw std::domain_error("oracle requires |mu| = j");
  if (j < 1 || j > lambda.size()) throw std::domain_error("oracle requires 1 <= j <= |lambda|");
  const TabloidSpace space(lambda);
  std::map<std::vector<int>, BigInt> chars;
  std::vector<int> images(static_cast<std::size_t>(j));
  std::iota(images.begin(), images.end(), 1);
  BigInt total = 0;
  do {
    const Permutation sigma(images);
    auto type = sigma.cycle_type();
    auto it = chars.find(type);
    if (it == chars.end()) it = chars.emplace(type, character(mu, sigma)).first;
    if (sgn(it->second) == 0) continue;
    std::uint64_t fixed = 0;
    for (std::size_t x = 0; x < space.size(); ++x) {
      bool fix = true;
      for (int p = 1; p <= j && fix; ++p) fix = space.row_of(x, sigma(p)) == space.row_of(x, p);
      fixed += fix;
    }
    total += it->second * BigInt(static_cast<unsigned long>(fixed));
  } while (std::next_permutation(images.begin(), images.end()));
  const BigInt order = factorial(j);
  if (total % order != 0) throw std::logic_error("character sum not divisible by |S_j|");
  return total / order;
}

}  // namespace permfft
