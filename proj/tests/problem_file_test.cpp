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

#include "qalloc/problem_file.hpp"

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace qalloc {
namespace {

using nlohmann::json;
using testing::data_path;

json minimal() {
  return json::parse(R"({
    "agents": ["a", "b"],
    "hierarchy": {"levels": [["a"], ["b"]]},
    "resources": ["x", "y"],
    "resource_order": {"levels": [["x", "y"]]},
    "requests": [[1, 0], [1, 1]],
    "plausibility": "possibilistic",
    "allocations": {"A": [[1, 0], [0, 1]]}
  })");
}

TEST(ProblemFileTest, Example1MatchesHandBuiltProblem) {
  const auto file = load_problem_file(data_path("example1.json"));
  const auto p = build_problem(file);
  const auto expected = testing::example1();
  EXPECT_EQ(p.hierarchy(), expected.hierarchy());
  EXPECT_EQ(p.resource_order(), expected.resource_order());
  EXPECT_EQ(p.requests(), expected.requests());
  EXPECT_EQ(p.lifting().kind(), LiftingKind::kCardinality);
  EXPECT_EQ(named_allocation(file, "E"), testing::example1_E());
  EXPECT_EQ(named_allocation(file, "F"), testing::example1_F());
  EXPECT_EQ(named_allocation(file, "G"), testing::example1_G());
  EXPECT_EQ(named_allocation(file, "H"), testing::example1_H());
  EXPECT_EQ(named_allocation(file, "Eprime"), testing::example1_Eprime());
  EXPECT_THROW(named_allocation(file, "Z"), DomainError);
}

TEST(ProblemFileTest, JsonRoundTrip) {
  const auto file = parse_problem_file(minimal());
  EXPECT_EQ(parse_problem_file(to_json(file)), file);
  const auto loaded = load_problem_file(data_path("example1.json"));
  EXPECT_EQ(parse_problem_file(to_json(loaded)), loaded);
}

TEST(ProblemFileTest, LevelsAndMatrixFormsAgree) {
  auto doc = minimal();
  doc["hierarchy"] = json{{"matrix", {{1, 1}, {0, 1}}}};
  EXPECT_EQ(build_problem(parse_problem_file(doc)).hierarchy(),
            build_problem(parse_problem_file(minimal())).hierarchy());
}

TEST(ProblemFileTest, StructuralErrors) {
  auto expect_invalid = [](json doc) {
    EXPECT_THROW(parse_problem_file(doc), Error) << doc.dump();
  };
  auto doc = minimal();
  doc.erase("requests");
  expect_invalid(doc);

  doc = minimal();
  doc["agents"] = {"a", "a"};
  expect_invalid(doc);

  doc = minimal();
  doc["requests"] = {{1, 0}};
  expect_invalid(doc);

  doc = minimal();
  doc["requests"] = {{1, 0}, {1, 2}};
  expect_invalid(doc);

  doc = minimal();
  doc["plausibility"] = "pessimistic";
  expect_invalid(doc);

  doc = minimal();
  doc["hierarchy"] = json{{"levels", {{"a"}, {"c"}}}};
  expect_invalid(doc);

  expect_invalid(json::array());
}

TEST(ProblemFileTest, SemanticErrorsSurfaceWhenBuilding) {
  auto doc = minimal();
  doc["hierarchy"] = json{{"matrix", {{1, 0}, {0, 1}}}};
  const auto file = parse_problem_file(doc);
  EXPECT_THROW(build_problem(file), PreorderValidationError);

  doc = minimal();
  doc["allocations"]["B"] = {{1, 1}, {1, 0}};
  EXPECT_THROW(named_allocation(parse_problem_file(doc), "B"),
               AllocationColumnError);
}

TEST(ProblemFileTest, LoadErrors) {
  EXPECT_THROW(load_problem_file(data_path("does-not-exist.json")),
               std::runtime_error);
}

TEST(IndexOfTest, Lookup) {
  const std::vector<std::string> names{"x", "y"};
  EXPECT_EQ(index_of(names, "y"), 1u);
  EXPECT_THROW(index_of(names, "z"), DomainError);
}

}  // namespace
}  // namespace qalloc
