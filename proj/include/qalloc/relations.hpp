// Copyright 2026 The qalloc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QALLOC_RELATIONS_HPP
#define QALLOC_RELATIONS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qalloc/bool_matrix.hpp"
#include "qalloc/errors.hpp"
#include "qalloc/index_set.hpp"

namespace qalloc {

/// Witness of a failed totality or transitivity check. For totality only
/// (i, j) is meaningful; for transitivity rel[i][j] = rel[j][k] = 1 while
/// rel[i][k] = 0.
struct PreorderViolation {
  enum class Kind { kTotality, kTransitivity };

  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;

  std::string describe() const;
  friend bool operator==(const PreorderViolation&,
                         const PreorderViolation&) = default;
};

class PreorderValidationError : public ValidationError {
 public:
  explicit PreorderValidationError(PreorderViolation v)
      : ValidationError(v.describe()), violation_(v) {}
  const PreorderViolation& violation() const { return violation_; }

 private:
  PreorderViolation violation_;
};

/// Returns the first violation found scanning row-major, or nullopt when the
/// matrix is a total preorder. Throws ShapeError if `rel` is not square.
std::optional<PreorderViolation> find_preorder_violation(const BoolMatrix& rel);

/// A total, transitive relation over {0, ..., size-1} held as its relation
/// matrix: rel(i, j) is true iff i is at least as high as j.
class TotalPreorder {
 public:
  /// Validates `rel`; throws ShapeError or PreorderValidationError.
  static TotalPreorder from_matrix(BoolMatrix rel);

  /// Compiles an ordered list of equivalence classes, highest first. The
  /// levels must partition {0, ..., size-1}; throws ValidationError otherwise.
  static TotalPreorder from_levels(
      std::size_t size, const std::vector<std::vector<std::size_t>>& levels);

  /// Every element indifferent to every other.
  static TotalPreorder universal(std::size_t size);

  std::size_t size() const { return rel_.rows(); }
  const BoolMatrix& matrix() const { return rel_; }

  /// i ⪰ j, bounds-checked.
  bool geq(std::size_t i, std::size_t j) const { return rel_.at(i, j); }

  /// Equivalence classes, highest first, each sorted ascending.
  std::vector<std::vector<std::size_t>> levels() const;

  /// Relation over the reordered element list: new element a is old element
  /// order[a]. `order` must be a permutation of {0, ..., size-1}.
  TotalPreorder reordered(const std::vector<std::size_t>& order) const;

  friend bool operator==(const TotalPreorder&, const TotalPreorder&) = default;

 private:
  explicit TotalPreorder(BoolMatrix rel) : rel_(std::move(rel)) {}

  BoolMatrix rel_;
};

/// Equivalent to TotalPreorder::from_matrix.
TotalPreorder validate_preorder(const BoolMatrix& rel);

/// i ≻ j: rel[i][j] and not rel[j][i].
bool strict(const TotalPreorder& p, std::size_t i, std::size_t j);

/// i ≃ j: rel[i][j] and rel[j][i].
bool indifferent(const TotalPreorder& p, std::size_t i, std::size_t j);

/// Members of `subset` that every member of `subset` is at least as high as.
/// Throws DomainError on an empty subset or one reaching past p.size().
IndexSet min_set(const TotalPreorder& p, IndexSet subset);

/// Members of `subset` at least as high as every member of `subset`.
IndexSet max_set(const TotalPreorder& p, IndexSet subset);

/// The matrix obtained by interchanging rows i and j of the identity; i == j
/// gives the identity itself.
class Permutation {
 public:
  Permutation(std::size_t size, std::size_t i, std::size_t j);
  static Permutation identity(std::size_t size) { return {size, 0, 0}; }

  std::size_t size() const { return size_; }
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }
  bool is_identity() const { return i_ == j_; }

  /// Image of a single index under the swap.
  std::size_t operator()(std::size_t index) const;

  BoolMatrix to_matrix() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::size_t size_;
  std::size_t i_;
  std::size_t j_;
};

/// Swaps entries i and j of `column`. Throws ShapeError on length mismatch.
std::vector<bool> apply_permutation(const Permutation& e,
                                    const std::vector<bool>& column);

}  // namespace qalloc

#endif  // QALLOC_RELATIONS_HPP
