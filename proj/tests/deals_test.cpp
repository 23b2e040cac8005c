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

#include <random>

#include "gtest/gtest.h"
#include "qalloc/oracle.hpp"
#include "test_support.hpp"

namespace qalloc {
namespace {

using testing::example1;
using testing::example1_E;
using testing::example1_Eprime;
using testing::example1_F;

// Agent 0 above agents 1 and 2. r0 is requested by agents 0 and 1, r1 by
// agent 1, r2 by nobody.
Problem ranked() {
  return Problem(TotalPreorder::from_levels(3, {{0}, {1, 2}}),
                 TotalPreorder::universal(3),
                 BoolMatrix::from_rows({{1, 0, 0}, {1, 1, 0}, {0, 0, 0}}),
                 PlausibilityLifting::cardinality(3));
}

TEST(DealTest, ApplyMovesOneColumn) {
  const Deal d{4, 2, 0};
  EXPECT_EQ(d.apply(example1_E()), example1_Eprime());
  EXPECT_THROW((Deal{4, 1, 0}.apply(example1_E())), ContractError);
  EXPECT_EQ(apply_permutation(d.permutation(3), example1_E().column(4)),
            example1_Eprime().column(4));
}

TEST(AsSimpleDealTest, Examples) {
  EXPECT_EQ(as_simple_deal(example1_E(), example1_Eprime()), (Deal{4, 2, 0}));
  EXPECT_FALSE(as_simple_deal(example1_E(), example1_E()).has_value());
  EXPECT_FALSE(as_simple_deal(example1_E(), example1_F()).has_value());
}

TEST(IsRationalTest, Example1) {
  const auto p = example1();
  EXPECT_TRUE(is_rational(p, Deal{4, 0, 2}));   // to the only requester
  EXPECT_FALSE(is_rational(p, Deal{4, 2, 0}));  // away from it
  EXPECT_TRUE(is_rational(p, Deal{5, 0, 1}));   // nobody requests r6
  EXPECT_THROW(is_rational(p, Deal{0, 1, 1}), DomainError);
  EXPECT_THROW(is_rational(p, Deal{6, 0, 1}), DomainError);
}

TEST(IsRationalTest, RankedHierarchy) {
  const auto p = ranked();
  // Agent 0 ranks above agent 1 but does not request r1 and nobody at or
  // above agent 0 does.
  EXPECT_TRUE(is_rational(p, Deal{1, 0, 1}));
  EXPECT_FALSE(is_rational(p, Deal{1, 1, 0}));
  // Agent 0 requests r0 and ranks above agent 1.
  EXPECT_TRUE(is_rational(p, Deal{0, 1, 0}));
  EXPECT_FALSE(is_rational(p, Deal{0, 0, 1}));
}

TEST(ComposeTest, Chains) {
  EXPECT_EQ(compose(Deal{2, 0, 1}, Deal{2, 1, 2}), (Deal{2, 0, 2}));
  EXPECT_EQ(compose(Deal{2, 0, 1}, Deal{2, 1, 0}), (Deal{2, 0, 0}));
  EXPECT_THROW(compose(Deal{2, 0, 1}, Deal{3, 1, 2}), CompositionError);
  EXPECT_THROW(compose(Deal{2, 0, 1}, Deal{2, 2, 0}), CompositionError);
}

TEST(GoodPositionTest, Example1) {
  const auto p = example1();
  EXPECT_TRUE(is_good(p, example1_E()));
  EXPECT_TRUE(is_good(p, example1_F()));
  EXPECT_FALSE(in_good_position(p, example1_Eprime(), 4));
  EXPECT_EQ(bad_columns(p, example1_Eprime()), (std::vector<std::size_t>{4}));
}

TEST(GoodPositionTest, RankedHierarchy) {
  const auto p = ranked();
  EXPECT_TRUE(in_good_position(p, Allocation::from_holders(3, {0, 1, 1}), 0));
  // Agent 1 requests r0 but agent 0, strictly above, also does.
  EXPECT_FALSE(in_good_position(p, Allocation::from_holders(3, {1, 1, 1}), 0));
  EXPECT_FALSE(in_good_position(p, Allocation::from_holders(3, {0, 2, 1}), 1));
  // Unrequested resources belong to the lowest level.
  EXPECT_TRUE(in_good_position(p, Allocation::from_holders(3, {0, 1, 2}), 2));
  EXPECT_FALSE(in_good_position(p, Allocation::from_holders(3, {0, 1, 0}), 2));
}

TEST(RepairColumnTest, Examples) {
  const auto [fixed, deal] = repair_column(example1(), example1_Eprime(), 4);
  EXPECT_EQ(deal, (Deal{4, 0, 2}));
  EXPECT_EQ(fixed, example1_E());

  const auto p = ranked();
  // Nobody requests r2: the lowest level is {1, 2}, lowest index wins.
  EXPECT_EQ(repair_column(p, Allocation::from_holders(3, {0, 1, 0}), 2).second,
            (Deal{2, 0, 1}));
  EXPECT_EQ(repair_column(p, Allocation::from_holders(3, {1, 1, 1}), 0).second,
            (Deal{0, 1, 0}));
  EXPECT_THROW(repair_column(p, Allocation::from_holders(3, {0, 1, 1}), 0),
               ContractError);
}

TEST(ToGoodTest, Example1) {
  const auto p = example1();
  const auto done = to_good(p, example1_E());
  EXPECT_TRUE(done.steps.empty());
  EXPECT_EQ(done.end, example1_E());

  const auto start = example1_E().with_holder(3, 0).with_holder(4, 0);
  const auto trace = to_good(p, start);
  ASSERT_EQ(trace.steps.size(), 2u);
  EXPECT_EQ(trace.steps[0], (Deal{3, 0, 1}));
  EXPECT_EQ(trace.steps[1], (Deal{4, 0, 2}));
  EXPECT_TRUE(is_good(p, trace.end));
  const auto path = trace.allocations();
  ASSERT_EQ(path.size(), 3u);
  EXPECT_EQ(path.front(), start);
  EXPECT_EQ(path.back(), trace.end);
}

class RandomDealTest
    : public ::testing::TestWithParam<std::tuple<std::uint64_t, LiftingKind>> {
 protected:
  std::mt19937_64 rng{std::get<0>(GetParam())};
  LiftingKind kind() const { return std::get<1>(GetParam()); }
};

TEST_P(RandomDealTest, TraceRepairsEachBadColumnOnceWithRationalDeals) {
  const auto p = random_problem(rng, 4, 5, kind());
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_allocation(rng, 4, 5);
    const auto bad = bad_columns(p, f);
    const auto trace = to_good(p, f);
    ASSERT_EQ(trace.steps.size(), bad.size());
    for (std::size_t s = 0; s < bad.size(); ++s) {
      EXPECT_EQ(trace.steps[s].resource, bad[s]);
      EXPECT_TRUE(is_rational(p, trace.steps[s]));
    }
    EXPECT_TRUE(is_good(p, trace.end));
    const auto path = trace.allocations();
    for (const auto& fp : path)
      EXPECT_EQ(dominance_set(p, fp, f), diff_set(p, f, fp));
  }
}

TEST_P(RandomDealTest, RepairLeavesOtherColumnsAlone) {
  const auto p = random_problem(rng, 4, 5, kind());
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_allocation(rng, 4, 5);
    for (auto r : bad_columns(p, f)) {
      const auto g = repair_column(p, f, r).first;
      EXPECT_TRUE(in_good_position(p, g, r));
      for (std::size_t s = 0; s < p.resources(); ++s)
        if (s != r)
          EXPECT_EQ(in_good_position(p, g, s), in_good_position(p, f, s));
    }
  }
}

TEST_P(RandomDealTest, MovingBadColumnToGoodPositionIsRational) {
  const auto p = random_problem(rng, 4, 4, kind());
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_allocation(rng, 4, 4);
    for (auto r : bad_columns(p, f))
      for (std::size_t j = 0; j < p.agents(); ++j) {
        const Deal d{r, f.holder(r), j};
        if (j == f.holder(r) || !in_good_position(p, d.apply(f), r)) continue;
        EXPECT_TRUE(is_rational(p, d));
      }
  }
}

TEST_P(RandomDealTest, RationalDealNeverMakesThingsWorse) {
  const auto p = random_problem(rng, 4, 4, kind());
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_allocation(rng, 4, 4);
    for (std::size_t r = 0; r < p.resources(); ++r)
      for (std::size_t j = 0; j < p.agents(); ++j) {
        if (j == f.holder(r)) continue;
        const Deal d{r, f.holder(r), j};
        if (is_rational(p, d))
          EXPECT_TRUE(welfare_compare(p, d.apply(f), f).left_weak());
      }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Seeds, RandomDealTest,
    ::testing::Combine(::testing::Range<std::uint64_t>(0, 10),
                       ::testing::Values(LiftingKind::kCardinality,
                                         LiftingKind::kPossibilistic)));

}  // namespace
}  // namespace qalloc
