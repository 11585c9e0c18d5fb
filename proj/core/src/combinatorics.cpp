#include "permfft/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permfft {

std::uint64_t to_u64(const BigInt& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw std::overflow_error("integer " + v.get_str() + " does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::remove_box(int row) const {
  std::vector<int> p = parts_;
  if (row < 0 || row >= length()) throw std::out_of_range("remove_box: no such row");
  if (--p[row] == 0) p.pop_back();
  return Partition(std::move(p));
}

Partition Partition::add_box(int row) const {
  std::vector<int> p = parts_;
  if (row == length()) {
    p.push_back(1);
  } else if (row >= 0 && row < length()) {
    ++p[row];
  } else {
    throw std::out_of_range("add_box: no such row");
  }
  return Partition(std::move(p));
}

std::vector<int> Partition::removable_rows() const {
  std::vector<int> rows;
  for (int i = 0; i < length(); ++i) {
    if ((*this)[i] > (*this)[i + 1]) rows.push_back(i);
  }
  return rows;
}

std::vector<int> Partition::addable_rows() const {
  std::vector<int> rows;
  for (int i = 0; i <= length(); ++i) {
    if (i == 0 || (*this)[i] < (*this)[i - 1]) rows.push_back(i);
  }
  return rows;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition token '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("bad partition token '" + token + "'");
    parts.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      if (token.empty()) throw std::invalid_argument("empty part in '" + text + "'");
      flush();
    } else if (c == '(' || c == ')' || c == ' ') {
      continue;
    } else {
      token += c;
    }
  }
  flush();
  return Partition(std::move(parts));
}

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("weak composition parts must be nonnegative");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

bool SkewShape::valid() const { return contains(outer, inner); }

Partition to_partition(const WeakComposition& alpha) {
  std::vector<int> parts;
  for (int p : alpha.parts()) {
    if (p > 0) parts.push_back(p);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::domain_error("dominance requires partitions of the same size");
  }
  const int rows = std::max(lambda.length(), mu.length());
  int a = 0;
  int b = 0;
  for (int i = 0; i < rows; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a > b) return false;
  }
  return true;
}

namespace {

using Shape = std::vector<int>;

// Column-strict fillings, peeling the largest letter off as a horizontal strip.
class KostkaCounter {
 public:
  explicit KostkaCounter(std::vector<int> content) : content_(std::move(content)) {}

  BigInt count(const Shape& shape) { return rec(shape, static_cast<int>(content_.size())); }

 private:
  BigInt rec(const Shape& shape, int letters) {
    if (letters == 0) {
      return std::all_of(shape.begin(), shape.end(), [](int p) { return p == 0; }) ? 1 : 0;
    }
    // Column strictness: a shape with more rows than letters is unfillable.
    int rows = 0;
    for (int p : shape) rows += p > 0;
    if (rows > letters) return 0;

    auto key = std::make_pair(shape, letters);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BigInt total = 0;
    Shape inner = shape;
    strip(shape, inner, 0, content_[letters - 1], letters, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

  // Chooses how many boxes the strip takes from each row; row i keeps at
  // least shape[i+1] boxes so the strip has at most one box per column.
  void strip(const Shape& shape, Shape& inner, std::size_t row, int remaining, int letters,
             BigInt& total) {
    if (row == shape.size()) {
      if (remaining == 0) total += rec(trimmed(inner), letters - 1);
      return;
    }
    const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
    const int max_take = std::min(remaining, shape[row] - below);
    for (int take = 0; take <= max_take; ++take) {
      inner[row] = shape[row] - take;
      strip(shape, inner, row + 1, remaining - take, letters, total);
    }
    inner[row] = shape[row];
  }

  static Shape trimmed(Shape s) {
    while (!s.empty() && s.back() == 0) s.pop_back();
    return s;
  }

  std::vector<int> content_;
  std::map<std::pair<Shape, int>, BigInt> memo_;
};

void generate_partitions(int remaining, int max_part, std::vector<int>& prefix,
                         std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

BigInt kostka(const Partition& mu, const std::vector<int>& content) {
  std::vector<int> letters;
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::domain_error("kostka content must be nonnegative");
    if (c > 0) letters.push_back(c);
    total += c;
  }
  if (total != mu.size()) throw std::domain_error("kostka requires |content| = |shape|");
  std::sort(letters.begin(), letters.end(), std::greater<>());
  KostkaCounter counter(std::move(letters));
  return counter.count(mu.parts());
}

BigInt kostka(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) {
    throw std::domain_error("kostka requires partitions of the same size");
  }
  if (!dominates(lambda, mu)) return 0;
  return kostka(mu, lambda.parts());
}

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt falling_factorial(int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("falling factorial requires 0 <= k <= n");
  BigInt out = 1;
  for (int i = 0; i < k; ++i) out *= n - i;
  return out;
}

BigInt dim_specht(const Partition& mu) {
  BigInt hooks = 1;
  for (int i = 0; i < mu.length(); ++i) {
    for (int j = 0; j < mu[i]; ++j) {
      int leg = 0;
      while (mu[i + leg + 1] > j) ++leg;
      hooks *= (mu[i] - j - 1) + leg + 1;
    }
  }
  return factorial(mu.size()) / hooks;
}

BigInt num_standard_skew(const SkewShape& shape) {
  if (!shape.valid()) return 0;
  std::map<Shape, BigInt> memo;
  const Shape& inner = shape.inner.parts();
  std::function<BigInt(const Partition&)> paths = [&](const Partition& nu) -> BigInt {
    if (nu.size() == shape.inner.size()) return nu == shape.inner ? 1 : 0;
    if (auto it = memo.find(nu.parts()); it != memo.end()) return it->second;
    BigInt total = 0;
    for (int row : nu.removable_rows()) {
      // Boxes of the inner shape are never removed.
      const int inner_len = row < static_cast<int>(inner.size()) ? inner[row] : 0;
      if (nu[row] - 1 < inner_len) continue;
      total += paths(nu.remove_box(row));
    }
    memo.emplace(nu.parts(), total);
    return total;
  };
  return paths(shape.outer);
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::domain_error("partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate_partitions(n, n, prefix, out);
  return out;
}

std::vector<Partition> dominating_set(int ell, int r) {
  std::vector<Partition> out;
  if (ell < 0 || r > ell) return out;
  if (ell == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> prefix;
  for (int first = ell; first >= std::max(r, 1); --first) {
    prefix.assign(1, first);
    generate_partitions(ell - first, first, prefix, out);
  }
  return out;
}

namespace {

Partition single_row(int length) {
  return length > 0 ? Partition({length}) : Partition();
}

}  // namespace

BigInt m_bound(int n, int k) {
  if (k < 1 || k >= n) throw std::domain_error("m_bound requires 1 <= k < n");
  const Partition wide = single_row(n - k - 1);
  const Partition wider = single_row(n - k);
  BigInt best = 0;
  for (const Partition& mu : dominating_set(n - 1, n - k - 1)) {
    BigInt value = num_standard_skew({mu, wide}) + k * num_standard_skew({mu, wider});
    if (value > best) best = value;
  }
  return best;
}

BigInt n_bound(int k) {
  if (k < 1) throw std::domain_error("n_bound requires k >= 1");
  // Stabilization margin: stop at the first n >= 3k+3 where M(n,k) repeats.
  BigInt best = 0;
  BigInt previous = -1;
  for (int n = k + 1;; ++n) {
    BigInt current = m_bound(n, k);
    if (current > best) best = current;
    if (n >= 3 * k + 3 && current == previous) break;
    previous = current;
  }
  return best;
}

BigInt sum_cubed_dims(int j) {
  BigInt total = 0;
  for (const Partition& mu : partitions_of(j)) {
    BigInt d = dim_specht(mu);
    total += d * d * d;
  }
  return total;
}

}  // namespace permfft
