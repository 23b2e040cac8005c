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

#ifndef QALLOC_DEALS_HPP
#define QALLOC_DEALS_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qalloc/core.hpp"
#include "qalloc/relations.hpp"

namespace qalloc {

/// Moves one resource from one agent to another: G equals F except that the
/// column of `resource` is E_ij c_r with i = from_agent and j = to_agent.
struct Deal {
  std::size_t resource = 0;
  std::size_t from_agent = 0;
  std::size_t to_agent = 0;

  /// E_ij over `agents` rows.
  Permutation permutation(std::size_t agents) const {
    return {agents, from_agent, to_agent};
  }
  /// G from F. F must grant `resource` to `from_agent`.
  Allocation apply(const Allocation& f) const;

  friend bool operator==(const Deal&, const Deal&) = default;
};

/// Negotiation history: start, one deal per step, end.
struct DealTrace {
  Allocation start;
  std::vector<Deal> steps;
  Allocation end;

  /// start, start∘d1, ..., end.
  std::vector<Allocation> allocations() const;
};

/// The unique deal turning F into G, or nullopt when F == G or they differ in
/// more than one column.
std::optional<Deal> as_simple_deal(const Allocation& f, const Allocation& g);

/// Condition (a_ji ∧ P_jr) or (a_ij ∧ no agent t with a_ti requests r), for
/// i = from_agent, j = to_agent. Throws DomainError for out-of-range indices
/// or from_agent == to_agent (not a simple deal).
bool is_rational(const Problem& p, const Deal& d);

/// Deal(r, d1.from, d2.to) when d2 continues d1 on the same resource; throws
/// CompositionError otherwise. A chain that returns to its first holder
/// composes to the identity (from_agent == to_agent).
Deal compose(const Deal& d1, const Deal& d2);

/// Column r of F is in good position: its holder requests r and nobody
/// strictly above the holder does, or nobody requests r and the holder has
/// minimal hierarchy.
bool in_good_position(const Problem& p, const Allocation& f, std::size_t r);

/// Every column in good position.
bool is_good(const Problem& p, const Allocation& f);

/// Resources whose columns are not in good position, ascending.
std::vector<std::size_t> bad_columns(const Problem& p, const Allocation& f);

/// Moves resource r to the lowest-index agent of max(I_r), where I_r are the
/// other requesters of r, or to the lowest-index agent of min(A) when I_r is
/// empty. The returned deal is rational and leaves the column in good
/// position. Throws ContractError if the column is already good.
std::pair<Allocation, Deal> repair_column(const Problem& p, const Allocation& f,
                                          std::size_t r);

/// Repairs bad columns in ascending resource order until the allocation is
/// good; one rational deal per initially bad column.
DealTrace to_good(const Problem& p, const Allocation& f);

}  // namespace qalloc

#endif  // QALLOC_DEALS_HPP
