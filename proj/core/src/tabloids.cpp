#include "permfft/tabloids.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace permfft {

namespace {

std::string word_key(const std::uint8_t* begin, std::size_t n) {
  return std::string(reinterpret_cast<const char*>(begin), n);
}

}  // namespace

Tabloid::Tabloid(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end());
    n_ += static_cast<int>(row.size());
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (const auto& row : rows_) {
    for (int e : row) {
      if (e < 1 || e > n_ || seen[static_cast<std::size_t>(e)]) {
        throw std::invalid_argument("tabloid rows must partition 1..n");
      }
      seen[static_cast<std::size_t>(e)] = true;
    }
  }
}

Tabloid Tabloid::from_row_word(const std::vector<int>& word, int row_count) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(row_count));
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p] < 0 || word[p] >= row_count) throw std::invalid_argument("row index out of range");
    rows[static_cast<std::size_t>(word[p])].push_back(static_cast<int>(p) + 1);
  }
  return Tabloid(std::move(rows));
}

WeakComposition Tabloid::shape() const {
  std::vector<int> sizes;
  for (const auto& row : rows_) sizes.push_back(static_cast<int>(row.size()));
  return WeakComposition(std::move(sizes));
}

std::vector<int> Tabloid::row_word() const {
  std::vector<int> word(static_cast<std::size_t>(n_));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (int e : rows_[r]) word[static_cast<std::size_t>(e - 1)] = static_cast<int>(r);
  return word;
}

std::string Tabloid::to_string() const {
  std::string out = "{";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += " | ";
    for (std::size_t i = 0; i < rows_[r].size(); ++i) {
      if (i) out += ",";
      out += std::to_string(rows_[r][i]);
    }
  }
  return out + "}";
}

TabloidSpace::TabloidSpace(Partition shape) : shape_(std::move(shape)) {
  const int n = shape_.size();
  if (n < 1) throw std::domain_error("tabloid space needs n >= 1");
  if (shape_.length() > 255) throw std::domain_error("too many rows");
  count_ = to_u64(factorial(n) / [&] {
    BigInt d = 1;
    for (int p : shape_.parts()) d *= factorial(p);
    return d;
  }());
  words_.resize(count_ * static_cast<std::size_t>(n));
  index_.reserve(count_);

  // Assign entry n first, then n-1, ...: lexicographic in the reversed word.
  std::vector<int> capacity = shape_.parts();
  std::vector<std::uint8_t> word(static_cast<std::size_t>(n));
  std::size_t next = 0;
  auto fill = [&](auto&& self, int entry) -> void {
    if (entry == 0) {
      std::copy(word.begin(), word.end(), words_.begin() + static_cast<std::ptrdiff_t>(next * n));
      index_.emplace(word_key(word.data(), word.size()), next);
      ++next;
      return;
    }
    for (std::size_t r = 0; r < capacity.size(); ++r) {
      if (capacity[r] == 0) continue;
      --capacity[r];
      word[static_cast<std::size_t>(entry - 1)] = static_cast<std::uint8_t>(r);
      self(self, entry - 1);
      ++capacity[r];
    }
  };
  fill(fill, n);
}

std::vector<int> TabloidSpace::word(std::size_t i) const {
  const auto n = static_cast<std::size_t>(this->n());
  return std::vector<int>(words_.begin() + static_cast<std::ptrdiff_t>(i * n),
                          words_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
}

Tabloid TabloidSpace::at(std::size_t i) const {
  if (i >= count_) throw std::out_of_range("tabloid index out of range");
  return Tabloid::from_row_word(word(i), shape_.length());
}

std::size_t TabloidSpace::index_of_word(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) != n()) throw std::out_of_range("tabloid of the wrong size");
  std::string key(word.size(), '\0');
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (word[p] < 0 || word[p] >= shape_.length()) throw std::out_of_range("row out of range");
    key[p] = static_cast<char>(word[p]);
  }
  auto it = index_.find(key);
  if (it == index_.end()) throw std::out_of_range("tabloid not in this space");
  return it->second;
}

std::size_t TabloidSpace::index_of(const Tabloid& t) const {
  if (static_cast<int>(t.rows().size()) != shape_.length()) {
    throw std::out_of_range("tabloid has the wrong number of rows");
  }
  return index_of_word(t.row_word());
}

TabloidSpace enumerate(const Partition& lambda) { return TabloidSpace(lambda); }

Tabloid act(const Permutation& sigma, const Tabloid& t) {
  if (sigma.n() != t.n()) throw std::domain_error("permutation and tabloid sizes differ");
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows)
    for (int& e : row) e = sigma(e);
  return Tabloid(std::move(rows));
}

SparseFactor permutation_matrix(const Permutation& sigma, const TabloidSpace& space) {
  if (sigma.n() != space.n()) throw std::domain_error("permutation and space sizes differ");
  std::vector<Triplet<Rational>> entries;
  entries.reserve(space.size());
  const int n = space.n();
  std::vector<int> image(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < space.size(); ++j) {
    for (int p = 1; p <= n; ++p) image[static_cast<std::size_t>(sigma(p) - 1)] = space.row_of(j, p);
    entries.push_back({space.index_of_word(image), j, Rational(1)});
  }
  return SparseFactor(space.size(), space.size(), std::move(entries));
}

std::vector<Orbit> orbits_under(const TabloidSpace& space, int j) {
  const int n = space.n();
  if (j < 1 || j > n) throw std::domain_error("orbit level must satisfy 1 <= j <= n");
  std::map<std::vector<int>, std::size_t> slot;
  std::vector<Orbit> orbits;
  const auto& shape = space.shape();
  for (std::size_t i = 0; i < space.size(); ++i) {
    std::vector<int> assignment;
    assignment.reserve(static_cast<std::size_t>(n - j));
    for (int p = j + 1; p <= n; ++p) assignment.push_back(space.row_of(i, p));
    auto [it, fresh] = slot.try_emplace(assignment, orbits.size());
    if (fresh) {
      // Remove entries n, n-1, ..., j+1 from their rows.
      std::vector<int> rows = shape.parts();
      for (int r : assignment) --rows[static_cast<std::size_t>(r)];
      WeakComposition comp(rows);
      orbits.push_back({OrbitKey{j, std::move(assignment)}, {}, comp, to_partition(comp)});
    }
    orbits[it->second].members.push_back(i);
  }
  return orbits;
}

}  // namespace permfft
