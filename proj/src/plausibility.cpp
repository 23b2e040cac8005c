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

#include "qalloc/plausibility.hpp"

#include <cstdint>
#include <sstream>

namespace qalloc {

std::string_view to_string(LiftingKind kind) {
  switch (kind) {
    case LiftingKind::kCardinality:
      return "cardinality";
    case LiftingKind::kPossibilistic:
      return "possibilistic";
    case LiftingKind::kCustom:
      return "custom";
  }
  return "unknown";
}

LiftingKind parse_lifting_kind(std::string_view key) {
  if (key == "cardinality") return LiftingKind::kCardinality;
  if (key == "possibilistic") return LiftingKind::kPossibilistic;
  throw ValidationError("unknown plausibility lifting \"" + std::string(key) +
                        "\" (expected \"cardinality\" or \"possibilistic\")");
}

PlausibilityLifting PlausibilityLifting::cardinality(std::size_t universe_size) {
  if (universe_size > kMaxElements)
    throw DomainError("resource universe exceeds the 64-element limit");
  return PlausibilityLifting(
      LiftingKind::kCardinality, universe_size, std::nullopt,
      [](IndexSet a, IndexSet b) { return a.size() >= b.size(); });
}

PlausibilityLifting PlausibilityLifting::possibilistic(TotalPreorder base) {
  const auto n = base.size();
  // The predicate owns its copy of the order; the stored base_ is for
  // inspection and verification.
  auto pred = [order = base](IndexSet a, IndexSet b) {
    if (b.empty()) return true;
    if (a.empty()) return false;
    const auto bs = b.to_vector();
    for (auto x : a.to_vector()) {
      bool dominates_all = true;
      for (auto y : bs) {
        if (!order.matrix()(x, y)) {
          dominates_all = false;
          break;
        }
      }
      if (dominates_all) return true;
    }
    return false;
  };
  return PlausibilityLifting(LiftingKind::kPossibilistic, n, std::move(base),
                             std::move(pred));
}

PlausibilityLifting PlausibilityLifting::custom(std::size_t universe_size,
                                                Predicate pred,
                                                std::optional<TotalPreorder> base) {
  if (!pred) throw DomainError("custom lifting without a predicate");
  if (base && base->size() != universe_size)
    throw ShapeError("custom lifting base order does not match universe size");
  return PlausibilityLifting(LiftingKind::kCustom, universe_size,
                             std::move(base), std::move(pred));
}

bool PlausibilityLifting::operator()(IndexSet a, IndexSet b) const {
  if (!a.within(universe_size_) || !b.within(universe_size_)) {
    std::ostringstream os;
    os << "resource set " << (a.within(universe_size_) ? b : a)
       << " names resources outside a universe of size " << universe_size_;
    throw DomainError(os.str());
  }
  return pred_(a, b);
}

bool at_least_as_plausible(const PlausibilityLifting& l, IndexSet a,
                           IndexSet b) {
  return l(a, b);
}

namespace {

LiftingVerification fail(IndexSet a, IndexSet b, std::string reason) {
  LiftingVerification v;
  v.ok = false;
  v.counterexample = std::make_pair(a, b);
  v.reason = std::move(reason);
  return v;
}

}  // namespace

LiftingVerification verify_lifting(const PlausibilityLifting& l,
                                   VerifyDepth depth) {
  const auto n = l.universe_size();
  const std::size_t limit = depth == VerifyDepth::kAllPairs ? 12 : 20;
  if (n > limit) {
    throw BudgetError("cannot verify a lifting over " + std::to_string(n) +
                      " resources at this depth (limit " +
                      std::to_string(limit) + ")");
  }
  const IndexSet none;
  if (!l(none, none)) return fail(none, none, "positivity: ∅ ⊒ ∅ fails");

  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < subsets; ++m) {
    const auto a = IndexSet::from_mask(m);
    if (!l(a, none)) return fail(a, none, "positivity: A ⊒ ∅ fails");
    if (l(none, a)) return fail(none, a, "positivity: ∅ ⊒ A holds");
  }

  if (const auto& base = l.base()) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const IndexSet a{x};
        const IndexSet b{y};
        if (l(a, b) != base->geq(x, y))
          return fail(a, b, "singleton extension disagrees with the base order");
      }
  }

  LiftingVerification ok;
  if (depth == VerifyDepth::kAllPairs) {
    bool total = true;
    for (std::uint64_t ma = 0; ma < subsets && total; ++ma)
      for (std::uint64_t mb = ma + 1; mb < subsets; ++mb) {
        const auto a = IndexSet::from_mask(ma);
        const auto b = IndexSet::from_mask(mb);
        if (!l(a, b) && !l(b, a)) {
          total = false;
          break;
        }
      }
    ok.total = total;
  }
  return ok;
}

}  // namespace qalloc
