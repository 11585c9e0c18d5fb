#pragma once

// Change of basis for a single S_m-orbit. An orbit whose entries 1..m fill
// rows with sizes beta is isomorphic to X^beta, so the block of C(B_m, B_{m-1})
// on it depends only on beta (with empty rows dropped) and is shared by every
// orbit and every lambda that produces the same composition.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "permfft/adapted_basis.hpp"
#include "permfft/combinatorics.hpp"
#include "permfft/numeric.hpp"

namespace permfft::detail {

template <class T>
struct LocalTransform {
  using Column = std::vector<std::pair<std::uint32_t, T>>;

  struct TopLabel {
    int shape = 0;  // index into shapes
    int copy = 0;
    int tableau = 0;  // index into standard_tableaux(shapes[shape])
  };

  std::vector<int> beta;  // no zero parts
  int m = 0;
  std::size_t dim = 1;

  std::vector<Partition> shapes;  // shapes with positive multiplicity
  std::vector<int> multiplicity;
  std::vector<std::size_t> shape_offset;
  std::map<Partition, int> shape_index;
  std::vector<TopLabel> top;

  // Level-(m-1) coordinates: the top bases of the children X^{beta - e_a},
  // concatenated over rows a.
  std::vector<std::shared_ptr<const LocalTransform>> children;
  std::vector<std::size_t> sub_offset;  // size rows + 1
  std::vector<int> sub_row;             // row a of each level-(m-1) coordinate

  // forward: level-(m-1) coords -> level-m coords, stored by column.
  std::vector<Column> forward_cols;
  // backward: level-m coords -> level-(m-1) coords, stored by column.
  std::vector<Column> backward_cols;

  /// Position of (mu, copy, tableau) among the top labels; npos if mu is absent.
  std::size_t top_index(const Partition& mu, int copy, std::size_t tableau) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Memoized local transforms. Rational instances carry the leading-one
/// normalization; double instances the orthonormal one.
template <class T>
std::shared_ptr<const LocalTransform<T>> local_transform(const std::vector<int>& composition);

std::vector<int> compress(const std::vector<int>& composition);

}  // namespace permfft::detail
