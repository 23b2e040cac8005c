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

#ifndef QALLOC_CORE_HPP
#define QALLOC_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qalloc/bool_matrix.hpp"
#include "qalloc/index_set.hpp"
#include "qalloc/plausibility.hpp"
#include "qalloc/relations.hpp"

namespace qalloc {

/// Agents with a hierarchy, resources with a likelihood order, who requests
/// what, and the plausibility lifting used to compare allocations.
class Problem {
 public:
  /// Throws ShapeError on inconsistent sizes and ValidationError when the
  /// lifting fails verify_lifting().
  Problem(TotalPreorder hierarchy, TotalPreorder resource_order,
          BoolMatrix requests, PlausibilityLifting lifting);

  std::size_t agents() const { return hierarchy_.size(); }
  std::size_t resources() const { return resource_order_.size(); }

  const TotalPreorder& hierarchy() const { return hierarchy_; }
  const TotalPreorder& resource_order() const { return resource_order_; }
  const BoolMatrix& requests() const { return requests_; }
  const PlausibilityLifting& lifting() const { return lifting_; }

  /// a_ij: agent i has higher or equal hierarchy than agent j.
  bool ranks(std::size_t i, std::size_t j) const {
    return hierarchy_.matrix()(i, j);
  }
  /// P_ir: agent i requests resource r.
  bool requests(std::size_t i, std::size_t r) const { return requests_(i, r); }

  /// Agents requesting r.
  IndexSet requesters(std::size_t r) const { return requesters_.at(r); }
  /// Agents of minimal hierarchy, min(A).
  IndexSet lowest_agents() const { return lowest_agents_; }

  void check_agent(std::size_t i) const;
  void check_resource(std::size_t r) const;

 private:
  TotalPreorder hierarchy_;
  TotalPreorder resource_order_;
  BoolMatrix requests_;
  PlausibilityLifting lifting_;
  std::vector<IndexSet> requesters_;
  IndexSet lowest_agents_;
};

/// Raised when a matrix has a column without exactly one 1.
class AllocationColumnError : public ValidationError {
 public:
  AllocationColumnError(std::size_t column, std::size_t ones);
  std::size_t column() const { return column_; }
  std::size_t ones() const { return ones_; }

 private:
  std::size_t column_;
  std::size_t ones_;
};

/// A q×k 0/1 matrix with exactly one 1 per column, held as the holder of
/// each column.
class Allocation {
 public:
  /// Throws AllocationColumnError for a column with zero or several 1s.
  static Allocation from_matrix(const BoolMatrix& m);
  /// holders[r] is the agent granted resource r.
  static Allocation from_holders(std::size_t agents,
                                 std::vector<std::size_t> holders);

  std::size_t agents() const { return agents_; }
  std::size_t resources() const { return holders_.size(); }
  std::size_t holder(std::size_t r) const { return holders_.at(r); }
  const std::vector<std::size_t>& holders() const { return holders_; }

  /// f_ir
  bool holds(std::size_t i, std::size_t r) const { return holder(r) == i; }
  /// Resources granted to agent i.
  IndexSet bundle(std::size_t i) const;

  std::vector<bool> column(std::size_t r) const;
  BoolMatrix matrix() const;

  /// Copy with resource r granted to `agent`.
  Allocation with_holder(std::size_t r, std::size_t agent) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  Allocation(std::size_t agents, std::vector<std::size_t> holders)
      : agents_(agents), holders_(std::move(holders)) {}

  std::size_t agents_ = 0;
  std::vector<std::size_t> holders_;
};

/// Throws ShapeError unless `f` has the problem's q×k shape.
void check_shape(const Problem& p, const Allocation& f);

struct PriorityMatrix {
  std::size_t resource;
  /// entries(i, j) = a_ij P_ir + (1 − a_ij)(1 − P_jr)
  BoolMatrix entries;
};

PriorityMatrix priority_matrix(const Problem& p, std::size_t r);

/// a^r_ij without materialising the matrix.
bool has_priority(const Problem& p, std::size_t r, std::size_t i,
                  std::size_t j);

/// Columns held by i and j are r-equivalent: a_ij = a_ji = 1 and P_ir = P_jr.
bool columns_equivalent(const Problem& p, std::size_t r, std::size_t i,
                        std::size_t j);

/// D_FG: resources whose columns in F and G are not r-equivalent.
IndexSet diff_set(const Problem& p, const Allocation& f, const Allocation& g);

/// [F≻G]: resources of D_FG where F's holder has priority over G's holder.
IndexSet dominance_set(const Problem& p, const Allocation& f,
                       const Allocation& g);

enum class WelfareVerdict { kLeftStrict, kRightStrict, kMutual, kIncomparable };

std::string_view to_string(WelfareVerdict v);

struct DominanceReport {
  IndexSet diff;
  IndexSet left_dominates;
  IndexSet right_dominates;
  WelfareVerdict verdict;

  /// F ⊵ G
  bool left_weak() const {
    return verdict == WelfareVerdict::kLeftStrict ||
           verdict == WelfareVerdict::kMutual;
  }
  /// G ⊵ F
  bool right_weak() const {
    return verdict == WelfareVerdict::kRightStrict ||
           verdict == WelfareVerdict::kMutual;
  }
};

/// Dominance-plausible comparison: F ⊵ G iff [F≻G] ⊒ [G≻F]. The verdict is
/// four-valued because ⊒ need not be total.
DominanceReport welfare_compare(const Problem& p, const Allocation& f,
                                const Allocation& g);

enum class OptimalityMethod {
  /// Good-allocation characterisation; valid for any positive lifting.
  kGoodness,
  /// F ⊵ G against every one of the q^k allocations.
  kExhaustive,
};

/// Throws BudgetError when the exhaustive path would enumerate more than
/// `max_allocations` allocations.
bool is_optimal(const Problem& p, const Allocation& f,
                OptimalityMethod method = OptimalityMethod::kGoodness,
                std::uint64_t max_allocations = 1'000'000);

}  // namespace qalloc

#endif  // QALLOC_CORE_HPP
