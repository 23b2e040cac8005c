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
#include <random>

#include "gtest/gtest.h"
#include "qalloc/oracle.hpp"

namespace qalloc {
namespace {

// {0} above {1, 2}.
TotalPreorder two_level() { return TotalPreorder::from_levels(3, {{0}, {1, 2}}); }

TEST(ValidatePreorderTest, AllOnesIsUniversalIndifference) {
  const auto p = validate_preorder(BoolMatrix(3, 3, true));
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.levels().size(), 1u);
}

TEST(ValidatePreorderTest, IdentityViolatesTotality) {
  const auto m = BoolMatrix::from_rows({{1, 0}, {0, 1}});
  const auto v = find_preorder_violation(m);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, PreorderViolation::Kind::kTotality);
  EXPECT_EQ(v->i, 0u);
  EXPECT_EQ(v->j, 1u);
  try {
    validate_preorder(m);
    FAIL() << "expected PreorderValidationError";
  } catch (const PreorderValidationError& e) {
    EXPECT_EQ(e.violation(), *v);
  }
}

TEST(ValidatePreorderTest, ReportsTransitivityWitness) {
  // 0⪰1, 1⪰2, 2⪰0 (completion for totality), but not 0⪰2.
  const auto m = BoolMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  const auto v = find_preorder_violation(m);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->kind, PreorderViolation::Kind::kTransitivity);
  EXPECT_EQ(v->i, 0u);
  EXPECT_EQ(v->j, 1u);
  EXPECT_EQ(v->k, 2u);
  EXPECT_THROW(validate_preorder(m), PreorderValidationError);
}

TEST(ValidatePreorderTest, NonSquareIsShapeError) {
  EXPECT_THROW(validate_preorder(BoolMatrix(2, 3, true)), ShapeError);
}

TEST(ValidatePreorderTest, LevelsMustPartition) {
  EXPECT_THROW(TotalPreorder::from_levels(3, {{0}, {1}}), ValidationError);
  EXPECT_THROW(TotalPreorder::from_levels(2, {{0, 1}, {1}}), ValidationError);
  EXPECT_THROW(TotalPreorder::from_levels(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(TotalPreorder::from_levels(2, {{0, 1}, {}}), ValidationError);
}

TEST(StrictTest, Examples) {
  const auto all = TotalPreorder::universal(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_FALSE(strict(all, i, j));

  const auto h = two_level();
  EXPECT_TRUE(strict(h, 0, 1));
  EXPECT_FALSE(strict(h, 1, 0));
  EXPECT_THROW(strict(h, 0, 3), DomainError);
}

TEST(IndifferentTest, Examples) {
  const auto all = TotalPreorder::universal(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(indifferent(all, i, j));
  const auto h = two_level();
  EXPECT_FALSE(indifferent(h, 0, 1));
  EXPECT_TRUE(indifferent(h, 1, 2));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(indifferent(h, i, i));
  EXPECT_THROW(indifferent(h, 5, 0), DomainError);
}

TEST(MinMaxSetTest, Examples) {
  const auto all = TotalPreorder::universal(3);
  EXPECT_EQ(min_set(all, IndexSet{0, 1, 2}), (IndexSet{0, 1, 2}));

  const auto h = two_level();
  EXPECT_EQ(max_set(h, IndexSet{0, 1, 2}), IndexSet{0});
  EXPECT_EQ(min_set(h, IndexSet{0, 1, 2}), (IndexSet{1, 2}));
  EXPECT_EQ(max_set(h, IndexSet{1, 2}), (IndexSet{1, 2}));
  EXPECT_EQ(min_set(h, IndexSet{0}), IndexSet{0});
}

TEST(MinMaxSetTest, RejectsEmptyOrForeignSubsets) {
  const auto h = two_level();
  EXPECT_THROW(min_set(h, IndexSet{}), DomainError);
  EXPECT_THROW(max_set(h, IndexSet{}), DomainError);
  EXPECT_THROW(max_set(h, IndexSet{0, 3}), DomainError);
}

TEST(PermutationTest, Examples) {
  // E_13 in 1-based terms swaps indices 0 and 2.
  EXPECT_EQ(apply_permutation(Permutation(3, 0, 2), {true, false, false}),
            (std::vector<bool>{false, false, true}));
  const std::vector<bool> v{true, false, true, true};
  EXPECT_EQ(apply_permutation(Permutation::identity(4), v), v);
  const Permutation e12(3, 0, 1);
  EXPECT_EQ(apply_permutation(e12, apply_permutation(e12, {true, false, false})),
            (std::vector<bool>{true, false, false}));
  EXPECT_THROW(apply_permutation(e12, {true, false}), ShapeError);
  EXPECT_THROW(Permutation(3, 0, 3), DomainError);
}

TEST(PermutationTest, MatrixIsSwappedIdentity) {
  const auto m = Permutation(3, 0, 2).to_matrix();
  EXPECT_EQ(m, BoolMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(Permutation(3, 2, 0).to_matrix(), m);
}

// Property tests over random preorders drawn as random ordered partitions.
class RandomPreorderTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomPreorderTest, ExactlyOneOfStrictStrictIndifferent) {
  std::mt19937_64 rng(GetParam());
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto p = random_preorder(rng, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const int count = (strict(p, i, j) ? 1 : 0) + (strict(p, j, i) ? 1 : 0) +
                          (indifferent(p, i, j) ? 1 : 0);
        EXPECT_EQ(count, 1) << "n=" << n << " i=" << i << " j=" << j;
      }
  }
}

TEST_P(RandomPreorderTest, MinMaxClosedUnderIndifference) {
  std::mt19937_64 rng(GetParam());
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto p = random_preorder(rng, n);
    std::uniform_int_distribution<std::uint64_t> pick(1, (1u << n) - 1);
    for (int trial = 0; trial < 10; ++trial) {
      const auto subset = IndexSet::from_mask(pick(rng));
      for (auto extreme : {min_set(p, subset), max_set(p, subset)}) {
        ASSERT_FALSE(extreme.empty());
        ASSERT_TRUE(extreme.is_subset_of(subset));
        for (auto a : extreme.to_vector())
          for (auto b : subset.to_vector())
            if (indifferent(p, a, b)) EXPECT_TRUE(extreme.contains(b));
      }
      for (auto t : min_set(p, subset).to_vector())
        for (auto s : subset.to_vector()) EXPECT_TRUE(p.geq(s, t));
      for (auto t : max_set(p, subset).to_vector())
        for (auto s : subset.to_vector()) EXPECT_TRUE(p.geq(t, s));
    }
  }
}

TEST_P(RandomPreorderTest, PermutationIsInvolutionPreservingEntries) {
  std::mt19937_64 rng(GetParam());
  std::bernoulli_distribution coin(0.5);
  for (std::size_t n = 1; n <= 8; ++n) {
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::vector<bool> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = coin(rng);
    const Permutation e(n, idx(rng), idx(rng));
    const auto once = apply_permutation(e, v);
    EXPECT_EQ(apply_permutation(e, once), v);
    EXPECT_EQ(std::count(once.begin(), once.end(), true),
              std::count(v.begin(), v.end(), true));
  }
}

TEST_P(RandomPreorderTest, ReorderingPermutesRowsAndColumns) {
  std::mt19937_64 rng(GetParam());
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto p = random_preorder(rng, n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto q = p.reordered(order);
    // Y = P X P^T with P the permutation matrix sending row a to order[a].
    BoolMatrix perm(n, n);
    for (std::size_t a = 0; a < n; ++a) perm.set(a, order[a], true);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        bool y = false;
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t t = 0; t < n; ++t)
            y = y || (perm(a, s) && p.matrix()(s, t) && perm(b, t));
        EXPECT_EQ(q.matrix()(a, b), y);
      }
    EXPECT_FALSE(find_preorder_violation(q.matrix()).has_value());
  }
}

TEST_P(RandomPreorderTest, LevelsRoundTrip) {
  std::mt19937_64 rng(GetParam());
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto p = random_preorder(rng, n);
    EXPECT_EQ(TotalPreorder::from_levels(n, p.levels()), p);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomPreorderTest,
                         ::testing::Range<std::uint64_t>(0, 20));

}  // namespace
}  // namespace qalloc
