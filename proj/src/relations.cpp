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

#include "qalloc/relations.hpp"

#include <algorithm>
#include <numeric>

namespace qalloc {

std::string PreorderViolation::describe() const {
  if (kind == Kind::kTotality) {
    return "totality violated at (" + std::to_string(i) + "," +
           std::to_string(j) + "): neither element is related to the other";
  }
  return "transitivity violated at (" + std::to_string(i) + "," +
         std::to_string(j) + "," + std::to_string(k) + "): " +
         std::to_string(i) + "⪰" + std::to_string(j) + " and " +
         std::to_string(j) + "⪰" + std::to_string(k) + " but not " +
         std::to_string(i) + "⪰" + std::to_string(k);
}

std::optional<PreorderViolation> find_preorder_violation(const BoolMatrix& rel) {
  if (!rel.square()) {
    throw ShapeError("relation matrix is " + std::to_string(rel.rows()) + "x" +
                     std::to_string(rel.cols()) + ", expected square");
  }
  const auto n = rel.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!rel(i, j) && !rel(j, i))
        return PreorderViolation{PreorderViolation::Kind::kTotality, i, j, 0};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (rel(j, k) && !rel(i, k))
          return PreorderViolation{PreorderViolation::Kind::kTransitivity, i, j,
                                   k};
    }
  return std::nullopt;
}

TotalPreorder TotalPreorder::from_matrix(BoolMatrix rel) {
  if (rel.rows() == 0) throw DomainError("preorder over an empty set");
  if (rel.rows() > kMaxElements)
    throw DomainError("preorder size exceeds the 64-element limit");
  if (auto v = find_preorder_violation(rel)) throw PreorderValidationError(*v);
  return TotalPreorder(std::move(rel));
}

TotalPreorder TotalPreorder::from_levels(
    std::size_t size, const std::vector<std::vector<std::size_t>>& levels) {
  std::vector<std::size_t> rank(size, size);
  for (std::size_t l = 0; l < levels.size(); ++l) {
    if (levels[l].empty()) {
      throw ValidationError("level " + std::to_string(l) + " is empty");
    }
    for (auto e : levels[l]) {
      if (e >= size) {
        throw ValidationError("level element " + std::to_string(e) +
                              " out of range");
      }
      if (rank[e] != size) {
        throw ValidationError("element " + std::to_string(e) +
                              " appears in more than one level");
      }
      rank[e] = l;
    }
  }
  for (std::size_t e = 0; e < size; ++e) {
    if (rank[e] == size) {
      throw ValidationError("element " + std::to_string(e) +
                            " is missing from the levels");
    }
  }
  BoolMatrix rel(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) rel.set(i, j, rank[i] <= rank[j]);
  return from_matrix(std::move(rel));
}

TotalPreorder TotalPreorder::universal(std::size_t size) {
  return from_matrix(BoolMatrix(size, size, true));
}

std::vector<std::vector<std::size_t>> TotalPreorder::levels() const {
  // The number of elements an element dominates orders the levels.
  const auto n = size();
  std::vector<std::size_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) below[i] += rel_(i, j) ? 1 : 0;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return below[a] > below[b]; });

  std::vector<std::vector<std::size_t>> out;
  for (auto e : order) {
    if (out.empty() || !rel_(out.back().front(), e) || !rel_(e, out.back().front()))
      out.emplace_back();
    out.back().push_back(e);
  }
  return out;
}

TotalPreorder TotalPreorder::reordered(
    const std::vector<std::size_t>& order) const {
  const auto n = size();
  if (order.size() != n) throw ShapeError("reorder length mismatch");
  std::vector<bool> seen(n, false);
  for (auto e : order) {
    if (e >= n || seen[e]) throw DomainError("reorder is not a permutation");
    seen[e] = true;
  }
  BoolMatrix rel(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rel.set(a, b, rel_(order[a], order[b]));
  return TotalPreorder(std::move(rel));
}

TotalPreorder validate_preorder(const BoolMatrix& rel) {
  return TotalPreorder::from_matrix(rel);
}

bool strict(const TotalPreorder& p, std::size_t i, std::size_t j) {
  return p.geq(i, j) && !p.geq(j, i);
}

bool indifferent(const TotalPreorder& p, std::size_t i, std::size_t j) {
  return p.geq(i, j) && p.geq(j, i);
}

namespace {

void check_subset(const TotalPreorder& p, IndexSet subset) {
  if (subset.empty()) throw DomainError("min/max of an empty subset");
  if (!subset.within(p.size()))
    throw DomainError("subset reaches past the preorder's domain");
}

}  // namespace

IndexSet min_set(const TotalPreorder& p, IndexSet subset) {
  check_subset(p, subset);
  IndexSet out;
  const auto members = subset.to_vector();
  for (auto t : members) {
    if (std::all_of(members.begin(), members.end(),
                    [&](auto s) { return p.matrix()(s, t); }))
      out.insert(t);
  }
  return out;
}

IndexSet max_set(const TotalPreorder& p, IndexSet subset) {
  check_subset(p, subset);
  IndexSet out;
  const auto members = subset.to_vector();
  for (auto t : members) {
    if (std::all_of(members.begin(), members.end(),
                    [&](auto s) { return p.matrix()(t, s); }))
      out.insert(t);
  }
  return out;
}

Permutation::Permutation(std::size_t size, std::size_t i, std::size_t j)
    : size_(size), i_(i), j_(j) {
  if (size == 0) throw DomainError("permutation of size 0");
  if (i >= size || j >= size) {
    throw DomainError("swap (" + std::to_string(i) + "," + std::to_string(j) +
                      ") out of range for size " + std::to_string(size));
  }
}

std::size_t Permutation::operator()(std::size_t index) const {
  if (index >= size_) throw DomainError("permutation index out of range");
  if (index == i_) return j_;
  if (index == j_) return i_;
  return index;
}

BoolMatrix Permutation::to_matrix() const {
  BoolMatrix m(size_, size_);
  for (std::size_t r = 0; r < size_; ++r) m.set(r, (*this)(r), true);
  return m;
}

std::vector<bool> apply_permutation(const Permutation& e,
                                    const std::vector<bool>& column) {
  if (column.size() != e.size()) {
    throw ShapeError("column of length " + std::to_string(column.size()) +
                     " does not match permutation size " +
                     std::to_string(e.size()));
  }
  std::vector<bool> out = column;
  out[e.first()] = column[e.second()];
  out[e.second()] = column[e.first()];
  return out;
}

}  // namespace qalloc
