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

// Brute-force verification. Everything here enumerates the q^k allocations
// of a problem and compares definitional answers (optimality by pairwise
// welfare comparison, A(r) as the set of holders over the good set, minimal
// dispersion over the good set) with the fast characterisations in core,
// deals and fairness.

#ifndef QALLOC_ORACLE_HPP
#define QALLOC_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qalloc/core.hpp"
#include "qalloc/fairness.hpp"

namespace qalloc {

struct OracleBudget {
  /// Cap on q^k.
  std::uint64_t max_allocations = 1'000'000;
  /// Pair-quantified checks sample this many pairs when the full cross
  /// product is larger.
  std::uint64_t max_pairs = 100'000;
  std::uint64_t seed = 0;
};

/// q^k, saturating at UINT64_MAX.
std::uint64_t allocation_count(std::size_t q, std::size_t k);

/// Decodes `index` in column-radix order: the holder of resource r is digit r
/// of `index` in base q, resource 0 least significant.
Allocation allocation_at(std::size_t q, std::size_t k, std::uint64_t index);

/// Calls `visit` on each allocation in column-radix order until it returns
/// false. Throws BudgetError if q^k exceeds `max_allocations`.
void for_each_allocation(std::size_t q, std::size_t k,
                         std::uint64_t max_allocations,
                         const std::function<bool(const Allocation&)>& visit);

std::vector<Allocation> enumerate_allocations(std::size_t q, std::size_t k,
                                              const OracleBudget& budget);

enum class CheckKind { kGoodOptimal, kPartition, kTrace, kFairness };

std::string_view to_string(CheckKind kind);
/// "good-optimal", "partition", "trace", "fairness"; throws DomainError
/// otherwise.
CheckKind parse_check_kind(std::string_view key);

/// A definitional result that disagrees with its characterisation.
struct Discrepancy {
  /// Which statement failed, e.g. "good-but-not-optimal".
  std::string kind;
  /// The instance and allocations involved, in a reproducible text form.
  std::string witness;
};

struct CheckReport {
  std::string check;
  bool passed = true;
  /// At most kMaxRecorded; stats["discrepancies"] holds the full count.
  std::vector<Discrepancy> discrepancies;
  std::map<std::string, std::uint64_t> stats;

  static constexpr std::size_t kMaxRecorded = 16;
  void record(std::string kind, std::string witness);
};

/// {F : F good} equals {F : F ⊵ G for all G}.
CheckReport check_good_equals_optimal(const Problem& p,
                                      const OracleBudget& budget = {});

/// For every pair (sampled beyond budget.max_pairs): D_FG = [F≻G] ∪ [G≻F]
/// and the two dominance sets are disjoint.
CheckReport check_partition_lemma(const Problem& p,
                                  const OracleBudget& budget = {});

/// For every start allocation: to_good takes one rational deal per bad
/// column, ends good, and D(F_1, F_p) = [F_p≻F_1] at every prefix.
CheckReport check_trace_dominance(const Problem& p,
                                  const OracleBudget& budget = {});

/// Closed-form A(r) against holders over the good set; minimality of the
/// locally fair allocation's dispersion; invariance of γ under within-class
/// permutations; class variances against the lower bound.
CheckReport check_fairness(const Problem& p, const OracleBudget& budget = {});

CheckReport run_check(CheckKind kind, const Problem& p,
                      const OracleBudget& budget = {});

/// Least variance over all compositions of L into n nonnegative parts, by
/// enumeration.
Rational min_composition_variance(std::uint64_t n, std::uint64_t L);

/// For every n ≤ n_max and L ≤ l_max, every composition meets the lower bound
/// with equality exactly when its parts differ by at most one.
CheckReport check_variance_bound(std::uint64_t n_max, std::uint64_t l_max);

/// Random total preorder drawn as a random ordered partition.
TotalPreorder random_preorder(std::mt19937_64& rng, std::size_t n);

/// Random hierarchy and resource order, fair-coin request matrix.
Problem random_problem(std::mt19937_64& rng, std::size_t q, std::size_t k,
                       LiftingKind lifting);

/// Every resource granted to a uniformly chosen agent.
Allocation random_allocation(std::mt19937_64& rng, std::size_t q,
                             std::size_t k);

/// Compact single-line description of a problem, used in witnesses.
std::string describe(const Problem& p);
std::string describe(const Allocation& f);

}  // namespace qalloc

#endif  // QALLOC_ORACLE_HPP
