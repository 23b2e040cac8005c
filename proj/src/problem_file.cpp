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

#include <algorithm>
#include <fstream>
#include <set>

namespace qalloc {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
  if (!doc.contains(key))
    throw ValidationError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::vector<std::string> parse_names(const json& doc, const char* key) {
  const auto& arr = field(doc, key);
  if (!arr.is_array() || arr.empty())
    throw ValidationError(std::string("\"") + key +
                          "\" must be a nonempty array of names");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& n : arr) {
    if (!n.is_string())
      throw ValidationError(std::string("\"") + key + "\" holds a non-string");
    auto s = n.get<std::string>();
    if (!seen.insert(s).second)
      throw ValidationError(std::string("duplicate name \"") + s + "\" in \"" +
                            key + "\"");
    names.push_back(std::move(s));
  }
  if (names.size() > kMaxElements)
    throw ValidationError(std::string("\"") + key +
                          "\" exceeds the 64-element limit");
  return names;
}

BoolMatrix parse_matrix(const json& m, const std::string& what,
                        std::size_t rows, std::size_t cols) {
  if (!m.is_array())
    throw ValidationError(what + " must be an array of 0/1 rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : m) {
    if (!row.is_array())
      throw ValidationError(what + " must be an array of 0/1 rows");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw ValidationError(what + " holds a non-integer entry");
      r.push_back(x.get<int>());
    }
    out.push_back(std::move(r));
  }
  if (out.size() != rows)
    throw ShapeError(what + " has " + std::to_string(out.size()) +
                     " rows, expected " + std::to_string(rows));
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i].size() != cols)
      throw ShapeError(what + " row " + std::to_string(i) + " has " +
                       std::to_string(out[i].size()) + " entries, expected " +
                       std::to_string(cols));
  try {
    return BoolMatrix::from_rows(out);
  } catch (const ValidationError& e) {
    throw ValidationError(what + ": " + e.what());
  }
}

PreorderSpec parse_preorder(const json& doc, const char* key,
                            const std::vector<std::string>& names) {
  const auto& spec = field(doc, key);
  if (!spec.is_object())
    throw ValidationError(std::string("\"") + key +
                          "\" must be an object with \"levels\" or \"matrix\"");
  if (spec.contains("levels") == spec.contains("matrix"))
    throw ValidationError(std::string("\"") + key +
                          "\" needs exactly one of \"levels\" or \"matrix\"");
  if (spec.contains("matrix"))
    return parse_matrix(spec.at("matrix"), std::string(key) + ".matrix",
                        names.size(), names.size());

  const auto& levels = spec.at("levels");
  if (!levels.is_array())
    throw ValidationError(std::string(key) + ".levels must be an array");
  NamedLevels out;
  for (const auto& level : levels) {
    if (!level.is_array())
      throw ValidationError(std::string(key) +
                            ".levels must hold arrays of names");
    auto& l = out.emplace_back();
    for (const auto& n : level) {
      if (!n.is_string())
        throw ValidationError(std::string(key) + ".levels holds a non-string");
      const auto& name = n.get_ref<const std::string&>();
      if (std::find(names.begin(), names.end(), name) == names.end())
        throw ValidationError(std::string(key) + ".levels names unknown \"" +
                              name + "\"");
      l.push_back(name);
    }
  }
  return out;
}

json preorder_to_json(const PreorderSpec& spec) {
  if (const auto* levels = std::get_if<NamedLevels>(&spec))
    return json{{"levels", *levels}};
  return json{{"matrix", std::get<BoolMatrix>(spec).to_rows()}};
}

TotalPreorder compile(const PreorderSpec& spec,
                      const std::vector<std::string>& names, const char* what) {
  if (const auto* m = std::get_if<BoolMatrix>(&spec))
    return TotalPreorder::from_matrix(*m);
  std::vector<std::vector<std::size_t>> levels;
  for (const auto& level : std::get<NamedLevels>(spec)) {
    auto& l = levels.emplace_back();
    for (const auto& n : level) {
      try {
        l.push_back(index_of(names, n));
      } catch (const DomainError&) {
        throw ValidationError(std::string(what) + " levels name unknown \"" +
                              n + "\"");
      }
    }
  }
  return TotalPreorder::from_levels(names.size(), levels);
}

}  // namespace

std::size_t index_of(const std::vector<std::string>& names,
                     const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw DomainError("unknown name \"" + name + "\"");
}

ProblemFile parse_problem_file(const json& doc) {
  if (!doc.is_object())
    throw ValidationError("problem file must be a JSON object");
  ProblemFile f;
  f.agents = parse_names(doc, "agents");
  f.resources = parse_names(doc, "resources");
  f.hierarchy = parse_preorder(doc, "hierarchy", f.agents);
  f.resource_order = parse_preorder(doc, "resource_order", f.resources);
  f.requests = parse_matrix(field(doc, "requests"), "requests", f.agents.size(),
                            f.resources.size());
  const auto& lifting = field(doc, "plausibility");
  if (!lifting.is_string())
    throw ValidationError("\"plausibility\" must be a string");
  f.plausibility = parse_lifting_kind(lifting.get<std::string>());
  if (doc.contains("allocations")) {
    const auto& allocs = doc.at("allocations");
    if (!allocs.is_object())
      throw ValidationError("\"allocations\" must be an object");
    for (const auto& [name, m] : allocs.items()) {
      f.allocations.emplace(
          name, parse_matrix(m, "allocation \"" + name + "\"", f.agents.size(),
                             f.resources.size()));
    }
  }
  return f;
}

json to_json(const ProblemFile& f) {
  json doc;
  doc["agents"] = f.agents;
  doc["hierarchy"] = preorder_to_json(f.hierarchy);
  doc["resources"] = f.resources;
  doc["resource_order"] = preorder_to_json(f.resource_order);
  doc["requests"] = f.requests.to_rows();
  doc["plausibility"] = std::string(to_string(f.plausibility));
  if (!f.allocations.empty()) {
    json allocs = json::object();
    for (const auto& [name, m] : f.allocations) allocs[name] = m.to_rows();
    doc["allocations"] = std::move(allocs);
  }
  return doc;
}

ProblemFile load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  return parse_problem_file(doc);
}

Problem build_problem(const ProblemFile& f) {
  auto hierarchy = compile(f.hierarchy, f.agents, "hierarchy");
  auto resource_order = compile(f.resource_order, f.resources, "resource_order");
  auto lifting = f.plausibility == LiftingKind::kPossibilistic
                     ? PlausibilityLifting::possibilistic(resource_order)
                     : PlausibilityLifting::cardinality(f.resources.size());
  return Problem(std::move(hierarchy), std::move(resource_order), f.requests,
                 std::move(lifting));
}

Allocation named_allocation(const ProblemFile& f, const std::string& name) {
  const auto it = f.allocations.find(name);
  if (it == f.allocations.end())
    throw DomainError("no allocation named \"" + name + "\"");
  return Allocation::from_matrix(it->second);
}

}  // namespace qalloc
