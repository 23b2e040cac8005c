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

#include "qalloc/fairness.hpp"

#include <algorithm>
#include <charconv>

#include "qalloc/deals.hpp"

namespace qalloc {

std::string to_fraction_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) {
    throw ValidationError("malformed fraction \"" + std::string(whole) + "\"");
  }
  return v;
}

}  // namespace

Rational parse_fraction(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, s));
  const auto den = parse_int(s.substr(slash + 1), s);
  if (den <= 0) throw ValidationError("fraction with nonpositive denominator");
  return {parse_int(s.substr(0, slash), s), den};
}

IndexSet agents_for_resource(const Problem& p, std::size_t r) {
  p.check_resource(r);
  const auto requesters = p.requesters(r);
  if (requesters.empty()) return p.lowest_agents();
  return max_set(p.hierarchy(), requesters);
}

std::size_t ClassPartition::class_of(std::size_t r) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (classes[c].resources.contains(r)) return c;
  throw DomainError("resource " + std::to_string(r) + " is in no class");
}

ClassPartition partition(const Problem& p) {
  ClassPartition out;
  IndexSet unrequested;
  for (std::size_t r = 0; r < p.resources(); ++r) {
    if (p.requesters(r).empty()) {
      unrequested.insert(r);
      continue;
    }
    const auto agents = agents_for_resource(p, r);
    auto it = std::find_if(out.classes.begin(), out.classes.end(),
                           [&](const auto& c) { return c.agents == agents; });
    if (it == out.classes.end()) {
      out.classes.push_back({r, IndexSet{r}, agents, false});
    } else {
      it->resources.insert(r);
    }
  }
  if (!unrequested.empty()) {
    out.classes.push_back(
        {unrequested.front(), unrequested, p.lowest_agents(), true});
  }
  return out;
}

Rational class_mean(const ResourceClass& cls) {
  return {static_cast<std::int64_t>(cls.resources.size()),
          static_cast<std::int64_t>(cls.agents.size())};
}

namespace {

// Variance of the per-agent counts of class resources; F is assumed good so
// every class resource is held inside cls.agents.
Rational variance_unchecked(const Allocation& f, const ResourceClass& cls) {
  const auto mean = class_mean(cls);
  Rational sum = 0;
  for (auto i : cls.agents.to_vector()) {
    const auto held = static_cast<std::int64_t>((f.bundle(i) & cls.resources).size());
    const Rational dev = Rational(held) - mean;
    sum += dev * dev;
  }
  return sum / static_cast<std::int64_t>(cls.agents.size());
}

void require_good(const Problem& p, const Allocation& f) {
  if (!is_good(p, f)) {
    throw ContractError(
        "dispersion is only defined for good allocations");
  }
}

}  // namespace

Rational class_variance(const Problem& p, const Allocation& f,
                        const ResourceClass& cls) {
  require_good(p, f);
  return variance_unchecked(f, cls);
}

DispersionVector dispersion_vector(const Problem& p, const Allocation& f) {
  return dispersion_vector(p, f, partition(p));
}

DispersionVector dispersion_vector(const Problem& p, const Allocation& f,
                                   const ClassPartition& classes) {
  require_good(p, f);
  DispersionVector out;
  out.values.reserve(classes.classes.size());
  for (const auto& cls : classes.classes)
    out.values.push_back(variance_unchecked(f, cls));
  return out;
}

std::string_view to_string(LocalVerdict v) {
  switch (v) {
    case LocalVerdict::kEqual:
      return "equal";
    case LocalVerdict::kLeftBetter:
      return "left_better_or_equal";
    case LocalVerdict::kRightBetter:
      return "right_better_or_equal";
    case LocalVerdict::kIncomparable:
      return "incomparable";
  }
  return "unknown";
}

LocalComparison local_compare(const Problem& p, const Allocation& f,
                              const Allocation& g) {
  const auto classes = partition(p);
  const auto gf = dispersion_vector(p, f, classes);
  const auto gg = dispersion_vector(p, g, classes);
  LocalComparison out{LocalVerdict::kEqual, {}};
  bool left_le = true;
  bool right_le = true;
  for (std::size_t c = 0; c < gf.values.size(); ++c) {
    if (gf.values[c] == gg.values[c]) continue;
    out.differing.push_back(c);
    if (gf.values[c] > gg.values[c]) left_le = false;
    if (gg.values[c] > gf.values[c]) right_le = false;
  }
  if (out.differing.empty()) {
    out.verdict = LocalVerdict::kEqual;
  } else if (left_le) {
    out.verdict = LocalVerdict::kLeftBetter;
  } else if (right_le) {
    out.verdict = LocalVerdict::kRightBetter;
  } else {
    out.verdict = LocalVerdict::kIncomparable;
  }
  return out;
}

Rational variance_lower_bound(std::uint64_t n, std::uint64_t L) {
  if (n == 0) throw DomainError("variance bound needs at least one part");
  const auto nn = static_cast<std::int64_t>(n);
  const auto beta = static_cast<std::int64_t>(L % n);
  return {(nn - beta) * beta, nn * nn};
}

Allocation locally_fair(const Problem& p) {
  std::vector<std::size_t> holders(p.resources(), 0);
  for (const auto& cls : partition(p).classes) {
    const auto agents = cls.agents.to_vector();
    std::size_t next = 0;
    for (auto r : cls.resources.to_vector()) {
      holders[r] = agents[next];
      next = (next + 1) % agents.size();
    }
  }
  return Allocation::from_holders(p.agents(), std::move(holders));
}

}  // namespace qalloc
