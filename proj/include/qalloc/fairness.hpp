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

#ifndef QALLOC_FAIRNESS_HPP
#define QALLOC_FAIRNESS_HPP

#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qalloc/core.hpp"
#include "qalloc/index_set.hpp"

namespace qalloc {

using Rational = boost::rational<std::int64_t>;

/// "2/9", "1/4", "0", "2": lowest terms, denominator omitted when 1.
std::string to_fraction_string(const Rational& x);
/// Inverse of to_fraction_string; throws ValidationError on malformed input.
Rational parse_fraction(std::string_view s);

/// A(r): agents that hold r in at least one good allocation. Closed form: the
/// highest-ranked requesters of r, or min(A) when nobody requests r.
IndexSet agents_for_resource(const Problem& p, std::size_t r);

/// One equivalence class [r] of resources sharing the same A(r).
struct ResourceClass {
  std::size_t representative;  // least resource index in the class
  IndexSet resources;
  IndexSet agents;
  /// True for R*, the resources nobody requests.
  bool unrequested = false;

  friend bool operator==(const ResourceClass&, const ResourceClass&) = default;
};

/// Classes of R \ R* ordered by least resource index, followed by R* when it
/// is nonempty.
struct ClassPartition {
  std::vector<ResourceClass> classes;

  /// Index of the class containing resource r.
  std::size_t class_of(std::size_t r) const;
};

ClassPartition partition(const Problem& p);

/// |[r]| / |A(r)|, the mean number of class resources per class agent.
Rational class_mean(const ResourceClass& cls);

/// Σ_{i∈A(r)} (Σ_{s∈[r]} f_is − mean)² / |A(r)|. Throws ContractError unless
/// F is good.
Rational class_variance(const Problem& p, const Allocation& f,
                        const ResourceClass& cls);

/// γ(F): one class variance per class, in partition order.
struct DispersionVector {
  std::vector<Rational> values;

  friend bool operator==(const DispersionVector&,
                         const DispersionVector&) = default;
};

DispersionVector dispersion_vector(const Problem& p, const Allocation& f);
/// Same, reusing an already computed partition.
DispersionVector dispersion_vector(const Problem& p, const Allocation& f,
                                   const ClassPartition& classes);

enum class LocalVerdict {
  kEqual,
  /// γ(F) ≤ γ(G) componentwise with at least one strict component.
  kLeftBetter,
  kRightBetter,
  kIncomparable,
};

std::string_view to_string(LocalVerdict v);

struct LocalComparison {
  LocalVerdict verdict;
  /// Class positions where the two vectors differ.
  std::vector<std::size_t> differing;
};

/// Componentwise comparison of dispersion vectors. Both allocations must be
/// good.
LocalComparison local_compare(const Problem& p, const Allocation& f,
                              const Allocation& g);

/// (n − β)β / n² with β = L mod n: the least variance of n nonnegative
/// integers summing to L. Throws DomainError for n = 0.
Rational variance_lower_bound(std::uint64_t n, std::uint64_t L);

/// A good allocation whose dispersion vector is componentwise minimal over
/// all good allocations. Within each class, resources go round-robin in
/// ascending index to the class agents in ascending index.
Allocation locally_fair(const Problem& p);

}  // namespace qalloc

#endif  // QALLOC_FAIRNESS_HPP
