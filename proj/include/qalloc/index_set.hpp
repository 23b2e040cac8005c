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

#ifndef QALLOC_INDEX_SET_HPP
#define QALLOC_INDEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "qalloc/errors.hpp"

namespace qalloc {

/// Upper bound on the number of agents and of resources in a problem.
inline constexpr std::size_t kMaxElements = 64;

/// A set of agent or resource indices in [0, 64), stored as a bit mask.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> indices) {
    for (auto i : indices) insert(i);
  }

  static constexpr IndexSet from_mask(std::uint64_t mask) {
    IndexSet s;
    s.mask_ = mask;
    return s;
  }
  /// {0, 1, ..., n-1}
  static IndexSet range(std::size_t n) {
    check(n == 0 ? 0 : n - 1);
    return from_mask(n == kMaxElements ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(mask_));
  }
  bool contains(std::size_t i) const {
    return i < kMaxElements && ((mask_ >> i) & 1U) != 0;
  }
  void insert(std::size_t i) {
    check(i);
    mask_ |= std::uint64_t{1} << i;
  }
  void erase(std::size_t i) {
    check(i);
    mask_ &= ~(std::uint64_t{1} << i);
  }
  /// Smallest member. The set must be nonempty.
  std::size_t front() const {
    if (empty()) throw DomainError("front() of an empty IndexSet");
    return static_cast<std::size_t>(std::countr_zero(mask_));
  }
  /// True iff every member is below `n`.
  constexpr bool within(std::size_t n) const {
    return n >= kMaxElements || (mask_ >> n) == 0;
  }
  constexpr bool is_subset_of(IndexSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (auto m = mask_; m != 0; m &= m - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) {
    return from_mask(a.mask_ | b.mask_);
  }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) {
    return from_mask(a.mask_ & b.mask_);
  }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) {
    return from_mask(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;

  friend std::ostream& operator<<(std::ostream& os, IndexSet s) {
    os << '{';
    bool first = true;
    for (auto i : s.to_vector()) {
      os << (first ? "" : ",") << i;
      first = false;
    }
    return os << '}';
  }

 private:
  static void check(std::size_t i) {
    if (i >= kMaxElements) {
      throw DomainError("index " + std::to_string(i) +
                        " exceeds the 64-element limit");
    }
  }

  std::uint64_t mask_ = 0;
};

}  // namespace qalloc

#endif  // QALLOC_INDEX_SET_HPP
