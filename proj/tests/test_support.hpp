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

#ifndef QALLOC_TESTS_TEST_SUPPORT_HPP
#define QALLOC_TESTS_TEST_SUPPORT_HPP

#include <string>

#include "qalloc/core.hpp"
#include "qalloc/fairness.hpp"

namespace qalloc::testing {

inline std::string data_path(const std::string& name) {
  return std::string(QALLOC_DATA_DIR) + "/" + name;
}

// Three agents of equal hierarchy, six resources. Agent 1 requests r1..r3,
// agent 2 requests r1..r4, agent 3 requests r1..r5; nobody requests r6.
// Indices are 0-based: agent "1" is 0, resource "r1" is 0.
inline Problem example1(LiftingKind kind = LiftingKind::kCardinality) {
  auto hierarchy = TotalPreorder::universal(3);
  auto resources = TotalPreorder::universal(6);
  auto requests = BoolMatrix::from_rows({
      {1, 1, 1, 0, 0, 0},
      {1, 1, 1, 1, 0, 0},
      {1, 1, 1, 1, 1, 0},
  });
  auto lifting = kind == LiftingKind::kPossibilistic
                     ? PlausibilityLifting::possibilistic(resources)
                     : PlausibilityLifting::cardinality(6);
  return Problem(hierarchy, resources, requests, lifting);
}

inline Allocation example1_E() {
  return Allocation::from_matrix(BoolMatrix::from_rows({
      {0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0},
      {1, 1, 1, 1, 1, 1},
  }));
}

inline Allocation example1_F() {
  return Allocation::from_matrix(BoolMatrix::from_rows({
      {1, 1, 0, 0, 0, 0},
      {0, 0, 1, 1, 0, 0},
      {0, 0, 0, 0, 1, 1},
  }));
}

inline Allocation example1_G() {
  return Allocation::from_matrix(BoolMatrix::from_rows({
      {1, 0, 0, 0, 0, 1},
      {0, 1, 0, 1, 0, 0},
      {0, 0, 1, 0, 1, 0},
  }));
}

inline Allocation example1_H() {
  return Allocation::from_matrix(BoolMatrix::from_rows({
      {1, 0, 0, 0, 0, 0},
      {0, 1, 0, 1, 0, 1},
      {0, 0, 1, 0, 1, 0},
  }));
}

// E with r5 moved from agent 3 to agent 1.
inline Allocation example1_Eprime() { return example1_E().with_holder(4, 0); }

inline Rational frac(std::int64_t n, std::int64_t d = 1) { return {n, d}; }

}  // namespace qalloc::testing

#endif  // QALLOC_TESTS_TEST_SUPPORT_HPP
