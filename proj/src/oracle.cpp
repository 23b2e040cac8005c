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

#include "qalloc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "qalloc/deals.hpp"

namespace qalloc {

std::uint64_t allocation_count(std::size_t q, std::size_t k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 1;
  for (std::size_t r = 0; r < k; ++r) {
    if (q != 0 && n > kMax / q) return kMax;
    n *= q;
  }
  return n;
}

Allocation allocation_at(std::size_t q, std::size_t k, std::uint64_t index) {
  std::vector<std::size_t> holders(k);
  for (std::size_t r = 0; r < k; ++r) {
    holders[r] = static_cast<std::size_t>(index % q);
    index /= q;
  }
  return Allocation::from_holders(q, std::move(holders));
}

void for_each_allocation(std::size_t q, std::size_t k,
                         std::uint64_t max_allocations,
                         const std::function<bool(const Allocation&)>& visit) {
  if (q == 0) throw DomainError("enumeration over zero agents");
  const auto total = allocation_count(q, k);
  if (total > max_allocations) {
    throw BudgetError("enumerating " + std::to_string(q) + "^" +
                      std::to_string(k) + " allocations exceeds the budget of " +
                      std::to_string(max_allocations));
  }
  // Odometer over the holders, resource 0 the fastest digit.
  std::vector<std::size_t> holders(k, 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    if (!visit(Allocation::from_holders(q, holders))) return;
    for (std::size_t r = 0; r < k; ++r) {
      if (++holders[r] < q) break;
      holders[r] = 0;
    }
  }
}

std::vector<Allocation> enumerate_allocations(std::size_t q, std::size_t k,
                                              const OracleBudget& budget) {
  std::vector<Allocation> out;
  for_each_allocation(q, k, budget.max_allocations, [&](const Allocation& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::string_view to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::kGoodOptimal:
      return "good-optimal";
    case CheckKind::kPartition:
      return "partition";
    case CheckKind::kTrace:
      return "trace";
    case CheckKind::kFairness:
      return "fairness";
  }
  return "unknown";
}

CheckKind parse_check_kind(std::string_view key) {
  for (auto kind : {CheckKind::kGoodOptimal, CheckKind::kPartition,
                    CheckKind::kTrace, CheckKind::kFairness}) {
    if (to_string(kind) == key) return kind;
  }
  throw DomainError("unknown oracle check \"" + std::string(key) + "\"");
}

void CheckReport::record(std::string kind, std::string witness) {
  passed = false;
  ++stats["discrepancies"];
  if (discrepancies.size() < kMaxRecorded)
    discrepancies.push_back({std::move(kind), std::move(witness)});
}

std::string describe(const Allocation& f) {
  std::ostringstream os;
  os << "holders=[";
  for (std::size_t r = 0; r < f.resources(); ++r)
    os << (r ? "," : "") << f.holder(r);
  os << ']';
  return os.str();
}

std::string describe(const Problem& p) {
  std::ostringstream os;
  const auto levels = [&](const TotalPreorder& t) {
    os << '[';
    bool first_level = true;
    for (const auto& l : t.levels()) {
      os << (first_level ? "" : ",") << '{';
      first_level = false;
      for (std::size_t e = 0; e < l.size(); ++e) os << (e ? "," : "") << l[e];
      os << '}';
    }
    os << ']';
  };
  os << "q=" << p.agents() << " k=" << p.resources() << " hierarchy=";
  levels(p.hierarchy());
  os << " resource_order=";
  levels(p.resource_order());
  os << " requests=";
  for (std::size_t i = 0; i < p.agents(); ++i) {
    os << (i ? "/" : "");
    for (std::size_t r = 0; r < p.resources(); ++r)
      os << (p.requests(i, r) ? '1' : '0');
  }
  os << " lifting=" << to_string(p.lifting().kind());
  return os.str();
}

namespace {

std::string witness(const Problem& p,
                    std::initializer_list<const Allocation*> fs) {
  std::string out = describe(p);
  for (const auto* f : fs) out += " " + describe(*f);
  return out;
}

template <typename Fn>
void for_each_pair(std::size_t n, const OracleBudget& budget,
                   CheckReport& report, Fn&& fn) {
  const auto pairs = static_cast<std::uint64_t>(n) * n;
  if (pairs <= budget.max_pairs) {
    report.stats["pairs"] = pairs;
    report.stats["sampled"] = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) fn(a, b);
    return;
  }
  report.stats["pairs"] = budget.max_pairs;
  report.stats["sampled"] = 1;
  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::uint64_t s = 0; s < budget.max_pairs; ++s) {
    const auto a = pick(rng);
    const auto b = pick(rng);
    fn(a, b);
  }
}

}  // namespace

CheckReport check_good_equals_optimal(const Problem& p,
                                      const OracleBudget& budget) {
  CheckReport report;
  report.check = std::string(to_string(CheckKind::kGoodOptimal));
  const auto all = enumerate_allocations(p.agents(), p.resources(), budget);
  std::uint64_t good_count = 0;
  std::uint64_t optimal_count = 0;
  for (const auto& f : all) {
    const bool good = is_good(p, f);
    bool optimal = true;
    for (const auto& g : all) {
      if (!welfare_compare(p, f, g).left_weak()) {
        optimal = false;
        break;
      }
    }
    good_count += good ? 1 : 0;
    optimal_count += optimal ? 1 : 0;
    if (good && !optimal) {
      report.record("good-but-not-optimal", witness(p, {&f}));
    } else if (!good && optimal) {
      report.record("optimal-but-not-good", witness(p, {&f}));
    }
  }
  report.stats["allocations"] = all.size();
  report.stats["good"] = good_count;
  report.stats["optimal"] = optimal_count;
  return report;
}

CheckReport check_partition_lemma(const Problem& p,
                                  const OracleBudget& budget) {
  CheckReport report;
  report.check = std::string(to_string(CheckKind::kPartition));
  const auto all = enumerate_allocations(p.agents(), p.resources(), budget);
  report.stats["allocations"] = all.size();
  for_each_pair(all.size(), budget, report, [&](std::size_t a, std::size_t b) {
    const auto& f = all[a];
    const auto& g = all[b];
    const auto diff = diff_set(p, f, g);
    const auto left = dominance_set(p, f, g);
    const auto right = dominance_set(p, g, f);
    if (!((left | right) == diff))
      report.record("union-differs-from-diff", witness(p, {&f, &g}));
    if (!(left & right).empty())
      report.record("dominance-sets-overlap", witness(p, {&f, &g}));
    if (!(diff == diff_set(p, g, f)))
      report.record("diff-not-symmetric", witness(p, {&f, &g}));
  });
  return report;
}

CheckReport check_trace_dominance(const Problem& p,
                                  const OracleBudget& budget) {
  CheckReport report;
  report.check = std::string(to_string(CheckKind::kTrace));
  std::uint64_t starts = 0;
  std::uint64_t steps = 0;
  for_each_allocation(
      p.agents(), p.resources(), budget.max_allocations,
      [&](const Allocation& start) {
        ++starts;
        const auto trace = to_good(p, start);
        steps += trace.steps.size();
        if (trace.steps.size() != bad_columns(p, start).size())
          report.record("step-count-differs-from-bad-columns",
                        witness(p, {&start}));
        if (!is_good(p, trace.end))
          report.record("trace-ends-bad", witness(p, {&start, &trace.end}));

        const auto chain = trace.allocations();
        for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
          const auto deal = as_simple_deal(chain[s], chain[s + 1]);
          if (!deal || !(*deal == trace.steps[s]) || !is_rational(p, *deal))
            report.record("step-not-rational",
                          witness(p, {&chain[s], &chain[s + 1]}));
        }
        for (std::size_t s = 1; s < chain.size(); ++s) {
          if (!(diff_set(p, chain.front(), chain[s]) ==
                dominance_set(p, chain[s], chain.front())))
            report.record("prefix-diff-not-dominated",
                          witness(p, {&chain.front(), &chain[s]}));
        }
        return true;
      });
  report.stats["starts"] = starts;
  report.stats["steps"] = steps;
  return report;
}

CheckReport check_fairness(const Problem& p, const OracleBudget& budget) {
  CheckReport report;
  report.check = std::string(to_string(CheckKind::kFairness));
  std::vector<Allocation> good;
  for_each_allocation(p.agents(), p.resources(), budget.max_allocations,
                      [&](const Allocation& f) {
                        if (is_good(p, f)) good.push_back(f);
                        return true;
                      });
  report.stats["good"] = good.size();
  if (good.empty()) {
    report.record("no-good-allocation", describe(p));
    return report;
  }

  // (a) A(r) from its definition.
  for (std::size_t r = 0; r < p.resources(); ++r) {
    IndexSet holders;
    for (const auto& f : good) holders.insert(f.holder(r));
    if (!(holders == agents_for_resource(p, r))) {
      std::ostringstream os;
      os << describe(p) << " resource=" << r << " definitional=" << holders
         << " closed_form=" << agents_for_resource(p, r);
      report.record("agents-for-resource-mismatch", os.str());
    }
  }

  const auto classes = partition(p);
  report.stats["classes"] = classes.classes.size();

  // Members of a requested class are hierarchy-indifferent requesters of
  // every resource in it.
  for (const auto& cls : classes.classes) {
    if (cls.unrequested) continue;
    for (auto i : cls.agents.to_vector()) {
      for (auto j : cls.agents.to_vector())
        if (!indifferent(p.hierarchy(), i, j))
          report.record("class-agents-not-indifferent", describe(p));
      for (auto r : cls.resources.to_vector())
        if (!p.requests(i, r))
          report.record("class-agent-does-not-request", describe(p));
    }
  }

  // (b) and (d): minimality of the locally fair allocation, variance bound.
  const auto fair = locally_fair(p);
  if (!is_good(p, fair)) {
    report.record("locally-fair-not-good", witness(p, {&fair}));
    return report;
  }
  const auto fair_gamma = dispersion_vector(p, fair, classes);
  for (const auto& g : good) {
    const auto gamma = dispersion_vector(p, g, classes);
    for (std::size_t c = 0; c < gamma.values.size(); ++c) {
      const auto& cls = classes.classes[c];
      if (fair_gamma.values[c] > gamma.values[c])
        report.record("locally-fair-not-minimal", witness(p, {&fair, &g}));

      const auto bound = variance_lower_bound(cls.agents.size(),
                                              cls.resources.size());
      std::size_t lo = std::numeric_limits<std::size_t>::max();
      std::size_t hi = 0;
      for (auto i : cls.agents.to_vector()) {
        const auto held = (g.bundle(i) & cls.resources).size();
        lo = std::min(lo, held);
        hi = std::max(hi, held);
      }
      const bool balanced = hi - lo <= 1;
      if (gamma.values[c] < bound || (gamma.values[c] == bound) != balanced)
        report.record("variance-bound-violated", witness(p, {&g}));
    }
  }

  // (c) Permuting columns within a class and relabelling agents within A(r)
  // keeps the allocation good and leaves γ unchanged.
  std::mt19937_64 rng(budget.seed);
  std::uint64_t permuted = 0;
  const std::size_t stride =
      std::max<std::size_t>(1, good.size() / std::max<std::uint64_t>(1, budget.max_pairs));
  for (std::size_t n = 0; n < good.size(); n += stride) {
    const auto& g = good[n];
    auto holders = g.holders();
    for (const auto& cls : classes.classes) {
      const auto rs = cls.resources.to_vector();
      std::vector<std::size_t> column_holders;
      for (auto r : rs) column_holders.push_back(holders[r]);
      std::shuffle(column_holders.begin(), column_holders.end(), rng);

      const auto agents = cls.agents.to_vector();
      auto relabel = agents;
      std::shuffle(relabel.begin(), relabel.end(), rng);
      for (std::size_t s = 0; s < rs.size(); ++s) {
        const auto pos = std::find(agents.begin(), agents.end(),
                                   column_holders[s]) - agents.begin();
        holders[rs[s]] = relabel[static_cast<std::size_t>(pos)];
      }
    }
    const auto h = Allocation::from_holders(p.agents(), holders);
    ++permuted;
    if (!is_good(p, h)) {
      report.record("permutation-left-good-set", witness(p, {&g, &h}));
    } else if (!(dispersion_vector(p, h, classes) ==
                 dispersion_vector(p, g, classes))) {
      report.record("gamma-not-permutation-invariant", witness(p, {&g, &h}));
    }
  }
  report.stats["permuted"] = permuted;
  return report;
}

CheckReport run_check(CheckKind kind, const Problem& p,
                      const OracleBudget& budget) {
  switch (kind) {
    case CheckKind::kGoodOptimal:
      return check_good_equals_optimal(p, budget);
    case CheckKind::kPartition:
      return check_partition_lemma(p, budget);
    case CheckKind::kTrace:
      return check_trace_dominance(p, budget);
    case CheckKind::kFairness:
      return check_fairness(p, budget);
  }
  throw DomainError("unknown check kind");
}

namespace {

// Calls fn on every vector of n nonnegative integers summing to L.
template <typename Fn>
void for_each_composition(std::uint64_t n, std::uint64_t L, Fn&& fn) {
  std::vector<std::uint64_t> parts(n, 0);
  const std::function<void(std::uint64_t, std::uint64_t)> rec =
      [&](std::uint64_t idx, std::uint64_t left) {
        if (idx + 1 == n) {
          parts[idx] = left;
          fn(parts);
          return;
        }
        for (std::uint64_t v = 0; v <= left; ++v) {
          parts[idx] = v;
          rec(idx + 1, left - v);
        }
      };
  rec(0, L);
}

Rational composition_variance(const std::vector<std::uint64_t>& parts,
                              std::uint64_t L) {
  const auto n = static_cast<std::int64_t>(parts.size());
  const Rational mean(static_cast<std::int64_t>(L), n);
  Rational sum = 0;
  for (auto x : parts) {
    const Rational d = Rational(static_cast<std::int64_t>(x)) - mean;
    sum += d * d;
  }
  return sum / n;
}

}  // namespace

Rational min_composition_variance(std::uint64_t n, std::uint64_t L) {
  if (n == 0) throw DomainError("composition into zero parts");
  std::optional<Rational> best;
  for_each_composition(n, L, [&](const auto& parts) {
    const auto v = composition_variance(parts, L);
    if (!best || v < *best) best = v;
  });
  return *best;
}

CheckReport check_variance_bound(std::uint64_t n_max, std::uint64_t l_max) {
  CheckReport report;
  report.check = "variance-bound";
  std::uint64_t compositions = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (std::uint64_t L = 0; L <= l_max; ++L) {
      const auto bound = variance_lower_bound(n, L);
      std::optional<Rational> best;
      for_each_composition(n, L, [&](const auto& parts) {
        ++compositions;
        const auto v = composition_variance(parts, L);
        const auto [lo, hi] = std::minmax_element(parts.begin(), parts.end());
        const bool balanced = *hi - *lo <= 1;
        if (v < bound || (v == bound) != balanced) {
          std::ostringstream os;
          os << "n=" << n << " L=" << L << " parts=[";
          for (std::size_t i = 0; i < parts.size(); ++i)
            os << (i ? "," : "") << parts[i];
          os << "] variance=" << to_fraction_string(v)
             << " bound=" << to_fraction_string(bound);
          report.record("composition-below-or-off-bound", os.str());
        }
        if (!best || v < *best) best = v;
      });
      if (*best != bound) {
        report.record("minimum-differs-from-bound",
                      "n=" + std::to_string(n) + " L=" + std::to_string(L) +
                          " min=" + to_fraction_string(*best) +
                          " bound=" + to_fraction_string(bound));
      }
    }
  }
  report.stats["compositions"] = compositions;
  return report;
}

TotalPreorder random_preorder(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> level(0, n - 1);
  std::vector<std::size_t> rank(n);
  for (auto& x : rank) x = level(rng);
  std::set<std::size_t> used(rank.begin(), rank.end());
  std::vector<std::vector<std::size_t>> levels;
  for (auto l : used) {
    levels.emplace_back();
    for (std::size_t e = 0; e < n; ++e)
      if (rank[e] == l) levels.back().push_back(e);
  }
  return TotalPreorder::from_levels(n, levels);
}

Problem random_problem(std::mt19937_64& rng, std::size_t q, std::size_t k,
                       LiftingKind lifting) {
  auto hierarchy = random_preorder(rng, q);
  auto resource_order = random_preorder(rng, k);
  std::bernoulli_distribution coin(0.5);
  BoolMatrix requests(q, k);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t r = 0; r < k; ++r) requests.set(i, r, coin(rng));
  if (lifting == LiftingKind::kCustom)
    throw DomainError("random problems use a built-in lifting");
  auto l = lifting == LiftingKind::kPossibilistic
               ? PlausibilityLifting::possibilistic(resource_order)
               : PlausibilityLifting::cardinality(k);
  return Problem(std::move(hierarchy), std::move(resource_order),
                 std::move(requests), std::move(l));
}

Allocation random_allocation(std::mt19937_64& rng, std::size_t q,
                             std::size_t k) {
  std::uniform_int_distribution<std::size_t> agent(0, q - 1);
  std::vector<std::size_t> holders(k);
  for (auto& h : holders) h = agent(rng);
  return Allocation::from_holders(q, std::move(holders));
}

}  // namespace qalloc
