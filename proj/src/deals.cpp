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

#include "qalloc/deals.hpp"

namespace qalloc {

Allocation Deal::apply(const Allocation& f) const {
  if (f.holder(resource) != from_agent) {
    throw ContractError("deal moves resource " + std::to_string(resource) +
                        " from agent " + std::to_string(from_agent) +
                        " but it is held by agent " +
                        std::to_string(f.holder(resource)));
  }
  return f.with_holder(resource, permutation(f.agents())(from_agent));
}

std::vector<Allocation> DealTrace::allocations() const {
  std::vector<Allocation> out{start};
  for (const auto& d : steps) out.push_back(d.apply(out.back()));
  return out;
}

std::optional<Deal> as_simple_deal(const Allocation& f, const Allocation& g) {
  if (f.agents() != g.agents() || f.resources() != g.resources())
    throw ShapeError("allocations of different shapes");
  std::optional<Deal> deal;
  for (std::size_t r = 0; r < f.resources(); ++r) {
    if (f.holder(r) == g.holder(r)) continue;
    if (deal) return std::nullopt;
    deal = Deal{r, f.holder(r), g.holder(r)};
  }
  return deal;
}

bool is_rational(const Problem& p, const Deal& d) {
  p.check_resource(d.resource);
  p.check_agent(d.from_agent);
  p.check_agent(d.to_agent);
  if (d.from_agent == d.to_agent)
    throw DomainError("identity deal is not a simple deal");

  const auto i = d.from_agent;
  const auto j = d.to_agent;
  const auto r = d.resource;
  if (p.ranks(j, i) && p.requests(j, r)) return true;
  if (!p.ranks(i, j)) return false;
  for (std::size_t t = 0; t < p.agents(); ++t)
    if (p.ranks(t, i) && p.requests(t, r)) return false;
  return true;
}

Deal compose(const Deal& d1, const Deal& d2) {
  if (d1.resource != d2.resource) {
    throw CompositionError("cannot compose deals on resources " +
                           std::to_string(d1.resource) + " and " +
                           std::to_string(d2.resource));
  }
  if (d1.to_agent != d2.from_agent) {
    throw CompositionError("deal to agent " + std::to_string(d1.to_agent) +
                           " is not continued by a deal from agent " +
                           std::to_string(d2.from_agent));
  }
  return {d1.resource, d1.from_agent, d2.to_agent};
}

bool in_good_position(const Problem& p, const Allocation& f, std::size_t r) {
  check_shape(p, f);
  p.check_resource(r);
  const auto i = f.holder(r);
  if (p.requests(i, r)) {
    for (std::size_t t = 0; t < p.agents(); ++t)
      if (p.ranks(t, i) && !p.ranks(i, t) && p.requests(t, r)) return false;
    return true;
  }
  return p.requesters(r).empty() && p.lowest_agents().contains(i);
}

bool is_good(const Problem& p, const Allocation& f) {
  check_shape(p, f);
  for (std::size_t r = 0; r < p.resources(); ++r)
    if (!in_good_position(p, f, r)) return false;
  return true;
}

std::vector<std::size_t> bad_columns(const Problem& p, const Allocation& f) {
  check_shape(p, f);
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < p.resources(); ++r)
    if (!in_good_position(p, f, r)) out.push_back(r);
  return out;
}

std::pair<Allocation, Deal> repair_column(const Problem& p, const Allocation& f,
                                          std::size_t r) {
  if (in_good_position(p, f, r)) {
    throw ContractError("column " + std::to_string(r) +
                        " is already in good position");
  }
  const auto i = f.holder(r);
  auto others = p.requesters(r);
  if (others.contains(i)) others.erase(i);
  const auto j = others.empty() ? p.lowest_agents().front()
                                : max_set(p.hierarchy(), others).front();
  const Deal deal{r, i, j};
  return {deal.apply(f), deal};
}

DealTrace to_good(const Problem& p, const Allocation& f) {
  check_shape(p, f);
  DealTrace trace{f, {}, f};
  for (std::size_t r = 0; r < p.resources(); ++r) {
    if (in_good_position(p, trace.end, r)) continue;
    auto [next, deal] = repair_column(p, trace.end, r);
    trace.steps.push_back(deal);
    trace.end = std::move(next);
  }
  return trace;
}

}  // namespace qalloc
