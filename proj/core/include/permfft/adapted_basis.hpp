#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permfft/combinatorics.hpp"
#include "permfft/sparse.hpp"
#include "permfft/symmetric_group.hpp"
#include "permfft/tabloids.hpp"

namespace permfft {

enum class Normalization { leading_one, orthonormal };

std::string to_string(Normalization n);
/// Accepts "leading-one" and "orthonormal".
Normalization parse_normalization(const std::string& text);

/// Raised when a multiplicity-space eigenproblem does not split as the
/// branching rule requires. The message names the offending block.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Gelfand-Tsetlin label is a standard tableau; its chain() lists the
/// shapes seen at levels 1..j.
using GTLabel = StandardTableau;

struct BasisLabel {
  OrbitKey orbit;
  Partition shape;  // shape of the label tableau
  int copy = 0;     // index within the frequency space of (orbit, shape)
  GTLabel tableau;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

template <class T>
struct LabeledBasisVector {
  BasisLabel label;
  std::vector<T> coords;  // in the standard basis of CX^lambda
};

struct FrequencySpaceRecord {
  int level = 0;
  OrbitKey orbit;
  Partition shape;
  int dimension = 0;
};

/// The bases B_1, ..., B_n of CX^lambda and the factors between them.
/// B_1 is the standard basis. Within B_j, vectors are grouped by S_j-orbit
/// (orbits ordered by first element), then by shape in reverse lexicographic
/// order, then copy, then tableau in last-letter order.
class AdaptedChain {
 public:
  AdaptedChain(Partition lambda, Normalization normalization);

  const Partition& shape() const { return space_->shape(); }
  int n() const { return space_->n(); }
  std::size_t size() const { return space_->size(); }
  Normalization normalization() const { return normalization_; }
  bool exact() const { return normalization_ == Normalization::leading_one; }
  const TabloidSpace& space() const { return *space_; }

  const std::vector<BasisLabel>& labels(int level) const;
  const std::vector<Orbit>& orbits(int level) const;

  /// C(B_j, B_{j-1}) for 2 <= j <= n. Exact factors exist only under
  /// leading-one normalization.
  const SparseMatrix<Rational>& exact_factor(int j) const;
  const SparseMatrix<Rational>& exact_inverse_factor(int j) const;
  const SparseMatrix<double>& factor(int j) const;
  const SparseMatrix<double>& inverse_factor(int j) const;

  /// Coordinates of every B_j vector in the standard basis. Intended for
  /// verification on small spaces.
  std::vector<LabeledBasisVector<Rational>> basis_exact(int level) const;
  std::vector<LabeledBasisVector<double>> basis(int level) const;

  const std::vector<FrequencySpaceRecord>& frequency_records() const { return records_; }

 private:
  void check_level(int j, int lowest) const;

  Normalization normalization_;
  std::shared_ptr<const TabloidSpace> space_;
  std::vector<std::vector<Orbit>> orbits_;        // index j-1
  std::vector<std::vector<BasisLabel>> labels_;   // index j-1
  std::vector<SparseMatrix<Rational>> exact_forward_, exact_backward_;  // index j-2
  std::vector<SparseMatrix<double>> forward_, backward_;                // index j-2
  std::vector<FrequencySpaceRecord> records_;
};

AdaptedChain build_chain(const Partition& lambda, Normalization normalization);

/// (orbit, shape) -> dimension of the frequency space at `level`.
std::map<std::pair<OrbitKey, Partition>, int> frequency_dimensions(
    const std::vector<FrequencySpaceRecord>& records, int level);

struct AdaptedReport {
  int level = 0;
  std::size_t generators_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks that every s_i, i < level, acts on B_level block diagonally with
/// blocks equal to the seminormal (leading-one) or orthogonal (orthonormal)
/// matrices of the label shapes.
AdaptedReport verify_adapted(const AdaptedChain& chain, int level);

}  // namespace permfft
