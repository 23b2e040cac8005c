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

#include "qalloc/core.hpp"

#include "qalloc/deals.hpp"
#include "qalloc/oracle.hpp"

namespace qalloc {

Problem::Problem(TotalPreorder hierarchy, TotalPreorder resource_order,
                 BoolMatrix requests, PlausibilityLifting lifting)
    : hierarchy_(std::move(hierarchy)),
      resource_order_(std::move(resource_order)),
      requests_(std::move(requests)),
      lifting_(std::move(lifting)) {
  const auto q = agents();
  const auto k = resources();
  if (requests_.rows() != q || requests_.cols() != k) {
    throw ShapeError("request matrix is " + std::to_string(requests_.rows()) +
                     "x" + std::to_string(requests_.cols()) + ", expected " +
                     std::to_string(q) + "x" + std::to_string(k));
  }
  if (lifting_.universe_size() != k) {
    throw ShapeError("plausibility lifting is defined over " +
                     std::to_string(lifting_.universe_size()) +
                     " resources, problem has " + std::to_string(k));
  }
  if (lifting_.base() && !(*lifting_.base() == resource_order_)) {
    throw ValidationError(
        "plausibility lifting extends a different resource order");
  }
  // The built-in liftings are positive by construction, so only small
  // universes and custom predicates go through the exhaustive check.
  if (k <= 20 || lifting_.kind() == LiftingKind::kCustom) {
    const auto v = verify_lifting(lifting_);
    if (!v.ok) throw ValidationError("plausibility lifting: " + v.reason);
  }

  requesters_.resize(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t i = 0; i < q; ++i)
      if (requests_(i, r)) requesters_[r].insert(i);
  lowest_agents_ = min_set(hierarchy_, IndexSet::range(q));
}

void Problem::check_agent(std::size_t i) const {
  if (i >= agents()) {
    throw DomainError("agent index " + std::to_string(i) + " out of range (q=" +
                      std::to_string(agents()) + ")");
  }
}

void Problem::check_resource(std::size_t r) const {
  if (r >= resources()) {
    throw DomainError("resource index " + std::to_string(r) +
                      " out of range (k=" + std::to_string(resources()) + ")");
  }
}

AllocationColumnError::AllocationColumnError(std::size_t column,
                                             std::size_t ones)
    : ValidationError("allocation column " + std::to_string(column) + " has " +
                      std::to_string(ones) + " entries equal to 1, expected 1"),
      column_(column),
      ones_(ones) {}

Allocation Allocation::from_matrix(const BoolMatrix& m) {
  if (m.rows() == 0) throw ShapeError("allocation with no agents");
  std::vector<std::size_t> holders(m.cols());
  for (std::size_t r = 0; r < m.cols(); ++r) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, r)) {
        holders[r] = i;
        ++ones;
      }
    }
    if (ones != 1) throw AllocationColumnError(r, ones);
  }
  return Allocation(m.rows(), std::move(holders));
}

Allocation Allocation::from_holders(std::size_t agents,
                                    std::vector<std::size_t> holders) {
  if (agents == 0) throw ShapeError("allocation with no agents");
  for (std::size_t r = 0; r < holders.size(); ++r) {
    if (holders[r] >= agents) {
      throw DomainError("holder " + std::to_string(holders[r]) +
                        " of resource " + std::to_string(r) +
                        " out of range");
    }
  }
  return Allocation(agents, std::move(holders));
}

IndexSet Allocation::bundle(std::size_t i) const {
  IndexSet out;
  for (std::size_t r = 0; r < holders_.size(); ++r)
    if (holders_[r] == i) out.insert(r);
  return out;
}

std::vector<bool> Allocation::column(std::size_t r) const {
  std::vector<bool> c(agents_, false);
  c[holder(r)] = true;
  return c;
}

BoolMatrix Allocation::matrix() const {
  BoolMatrix m(agents_, holders_.size());
  for (std::size_t r = 0; r < holders_.size(); ++r) m.set(holders_[r], r, true);
  return m;
}

Allocation Allocation::with_holder(std::size_t r, std::size_t agent) const {
  if (agent >= agents_) throw DomainError("agent index out of range");
  auto holders = holders_;
  holders.at(r) = agent;
  return Allocation(agents_, std::move(holders));
}

void check_shape(const Problem& p, const Allocation& f) {
  if (f.agents() != p.agents() || f.resources() != p.resources()) {
    throw ShapeError("allocation is " + std::to_string(f.agents()) + "x" +
                     std::to_string(f.resources()) + ", problem is " +
                     std::to_string(p.agents()) + "x" +
                     std::to_string(p.resources()));
  }
}

PriorityMatrix priority_matrix(const Problem& p, std::size_t r) {
  p.check_resource(r);
  const auto q = p.agents();
  BoolMatrix m(q, q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) m.set(i, j, has_priority(p, r, i, j));
  return {r, std::move(m)};
}

bool has_priority(const Problem& p, std::size_t r, std::size_t i,
                  std::size_t j) {
  const int a = p.ranks(i, j) ? 1 : 0;
  const int pi = p.requests(i, r) ? 1 : 0;
  const int pj = p.requests(j, r) ? 1 : 0;
  return a * pi + (1 - a) * (1 - pj) == 1;
}

bool columns_equivalent(const Problem& p, std::size_t r, std::size_t i,
                        std::size_t j) {
  p.check_resource(r);
  p.check_agent(i);
  p.check_agent(j);
  return p.ranks(i, j) && p.ranks(j, i) && p.requests(i, r) == p.requests(j, r);
}

IndexSet diff_set(const Problem& p, const Allocation& f, const Allocation& g) {
  check_shape(p, f);
  check_shape(p, g);
  IndexSet out;
  for (std::size_t r = 0; r < p.resources(); ++r)
    if (!columns_equivalent(p, r, f.holder(r), g.holder(r))) out.insert(r);
  return out;
}

IndexSet dominance_set(const Problem& p, const Allocation& f,
                       const Allocation& g) {
  IndexSet out;
  for (auto r : diff_set(p, f, g).to_vector())
    if (has_priority(p, r, f.holder(r), g.holder(r))) out.insert(r);
  return out;
}

std::string_view to_string(WelfareVerdict v) {
  switch (v) {
    case WelfareVerdict::kLeftStrict:
      return "left_strict";
    case WelfareVerdict::kRightStrict:
      return "right_strict";
    case WelfareVerdict::kMutual:
      return "mutual";
    case WelfareVerdict::kIncomparable:
      return "incomparable";
  }
  return "unknown";
}

DominanceReport welfare_compare(const Problem& p, const Allocation& f,
                                const Allocation& g) {
  DominanceReport rep;
  rep.diff = diff_set(p, f, g);
  for (auto r : rep.diff.to_vector()) {
    if (has_priority(p, r, f.holder(r), g.holder(r))) rep.left_dominates.insert(r);
    if (has_priority(p, r, g.holder(r), f.holder(r))) rep.right_dominates.insert(r);
  }
  const bool left = p.lifting()(rep.left_dominates, rep.right_dominates);
  const bool right = p.lifting()(rep.right_dominates, rep.left_dominates);
  if (left && right) {
    rep.verdict = WelfareVerdict::kMutual;
  } else if (left) {
    rep.verdict = WelfareVerdict::kLeftStrict;
  } else if (right) {
    rep.verdict = WelfareVerdict::kRightStrict;
  } else {
    rep.verdict = WelfareVerdict::kIncomparable;
  }
  return rep;
}

bool is_optimal(const Problem& p, const Allocation& f, OptimalityMethod method,
                std::uint64_t max_allocations) {
  check_shape(p, f);
  if (method == OptimalityMethod::kGoodness) return is_good(p, f);

  bool optimal = true;
  for_each_allocation(p.agents(), p.resources(), max_allocations,
                      [&](const Allocation& g) {
                        if (!welfare_compare(p, f, g).left_weak()) {
                          optimal = false;
                          return false;
                        }
                        return true;
                      });
  return optimal;
}

}  // namespace qalloc
