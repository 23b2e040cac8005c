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

#ifndef QALLOC_PLAUSIBILITY_HPP
#define QALLOC_PLAUSIBILITY_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qalloc/index_set.hpp"
#include "qalloc/relations.hpp"

namespace qalloc {

enum class LiftingKind { kCardinality, kPossibilistic, kCustom };

std::string_view to_string(LiftingKind kind);
/// Parses "cardinality" or "possibilistic"; throws ValidationError otherwise.
LiftingKind parse_lifting_kind(std::string_view key);

/// A binary relation ⊒ on subsets of the resource set, read "A is at least as
/// plausible as B".
///
/// Two liftings are built in:
///  - cardinality: A ⊒ B iff |A| ≥ |B|;
///  - possibilistic (optimistic): ∅ ⊒ ∅, A ⊒ ∅ for nonempty A, never ∅ ⊒ A
///    for nonempty A, and otherwise A ⊒ B iff some a in A is ⪰ every b in B.
///
/// A custom predicate may be wrapped too; it carries no guarantees until it
/// passes verify_lifting().
class PlausibilityLifting {
 public:
  using Predicate = std::function<bool(IndexSet, IndexSet)>;

  static PlausibilityLifting cardinality(std::size_t universe_size);
  static PlausibilityLifting possibilistic(TotalPreorder base);
  /// `base`, when given, is the resource order the predicate claims to extend
  /// on singletons.
  static PlausibilityLifting custom(std::size_t universe_size, Predicate pred,
                                    std::optional<TotalPreorder> base = {});

  LiftingKind kind() const { return kind_; }
  std::size_t universe_size() const { return universe_size_; }
  const std::optional<TotalPreorder>& base() const { return base_; }

  /// A ⊒ B. Throws DomainError if either set names an unknown resource.
  bool operator()(IndexSet a, IndexSet b) const;

 private:
  PlausibilityLifting(LiftingKind kind, std::size_t universe_size,
                      std::optional<TotalPreorder> base, Predicate pred)
      : kind_(kind),
        universe_size_(universe_size),
        base_(std::move(base)),
        pred_(std::move(pred)) {}

  LiftingKind kind_;
  std::size_t universe_size_;
  std::optional<TotalPreorder> base_;
  Predicate pred_;
};

/// A ⊒ B under `l`.
bool at_least_as_plausible(const PlausibilityLifting& l, IndexSet a,
                           IndexSet b);

enum class VerifyDepth {
  /// Positivity over every subset plus singleton extension; |R| ≤ 20.
  kPositivity,
  /// Additionally evaluates every ordered pair of subsets to decide whether
  /// the relation is total; |R| ≤ 12.
  kAllPairs,
};

struct LiftingVerification {
  bool ok = true;
  /// First offending pair (A, B) and what was wrong with it.
  std::optional<std::pair<IndexSet, IndexSet>> counterexample;
  std::string reason;
  /// Set only at VerifyDepth::kAllPairs.
  std::optional<bool> total;
};

/// Checks that `l` is positive (∅ ⊒ ∅; A ⊒ ∅ and not ∅ ⊒ A for A ≠ ∅) and, if
/// it declares a base order, that {a} ⊒ {b} iff a ⪰ b. Throws BudgetError if
/// the universe is too large for the requested depth.
LiftingVerification verify_lifting(const PlausibilityLifting& l,
                                   VerifyDepth depth = VerifyDepth::kPositivity);

}  // namespace qalloc

#endif  // QALLOC_PLAUSIBILITY_HPP
