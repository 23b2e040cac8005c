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

// JSON problem files:
//
//   {
//     "agents": ["1", "2", "3"],
//     "hierarchy": {"levels": [["1", "2", "3"]]},      // or {"matrix": [[..]]}
//     "resources": ["r1", ...],
//     "resource_order": {"levels": [["r1", ...]]},     // or {"matrix": ...}
//     "requests": [[1, 1, 0, ...], ...],               // q rows of k 0/1
//     "plausibility": "cardinality",                   // or "possibilistic"
//     "allocations": {"E": [[...], ...], ...}          // optional
//   }
//
// Parsing checks the document structure (types, names, shapes). Preorder
// axioms, lifting positivity and the one-holder-per-column rule are checked
// when the file is turned into a Problem and Allocations.

#ifndef QALLOC_PROBLEM_FILE_HPP
#define QALLOC_PROBLEM_FILE_HPP

#include <filesystem>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "qalloc/bool_matrix.hpp"
#include "qalloc/core.hpp"
#include "qalloc/plausibility.hpp"

namespace qalloc {

/// Ordered equivalence classes of names, highest first.
using NamedLevels = std::vector<std::vector<std::string>>;

/// A preorder as written in the file: levels or an explicit matrix.
using PreorderSpec = std::variant<NamedLevels, BoolMatrix>;

struct ProblemFile {
  std::vector<std::string> agents;
  PreorderSpec hierarchy;
  std::vector<std::string> resources;
  PreorderSpec resource_order;
  BoolMatrix requests;
  LiftingKind plausibility = LiftingKind::kCardinality;
  std::map<std::string, BoolMatrix> allocations;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Throws ValidationError (or ShapeError) naming the offending field.
ProblemFile parse_problem_file(const nlohmann::json& doc);
nlohmann::json to_json(const ProblemFile& file);

/// Reads and parses `path`. Throws std::runtime_error if the file cannot be
/// opened and ValidationError on malformed JSON.
ProblemFile load_problem_file(const std::filesystem::path& path);

/// Compiles preorders, builds the lifting and validates the problem.
Problem build_problem(const ProblemFile& file);

/// Throws DomainError for an unknown name, AllocationColumnError for a bad
/// column.
Allocation named_allocation(const ProblemFile& file, const std::string& name);

/// Index of a name within `names`; throws DomainError if absent.
std::size_t index_of(const std::vector<std::string>& names,
                     const std::string& name);

}  // namespace qalloc

#endif  // QALLOC_PROBLEM_FILE_HPP
