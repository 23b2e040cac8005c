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

#include "qalloc/cli.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>

#include "qalloc/deals.hpp"
#include "qalloc/fairness.hpp"
#include "qalloc/oracle.hpp"
#include "qalloc/problem_file.hpp"

namespace qalloc::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string file;
  bool pretty = false;
  std::string left;
  std::string right;
  std::string start;
  bool uniform_random = false;
  std::uint64_t seed = 0;
  std::string check;
  std::uint64_t budget = OracleBudget{}.max_allocations;
  std::uint64_t max_pairs = OracleBudget{}.max_pairs;
};

json names_of(IndexSet s, const std::vector<std::string>& names) {
  json out = json::array();
  for (auto i : s.to_vector()) out.push_back(names.at(i));
  return out;
}

std::string join(const json& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i)
    out += (i ? ", " : "") + names[i].get<std::string>();
  return out + "}";
}

json gamma_json(const DispersionVector& g) {
  json out = json::array();
  for (const auto& v : g.values) out.push_back(to_fraction_string(v));
  return out;
}

std::string gamma_text(const json& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.size(); ++i)
    out += (i ? ", " : "") + g[i].get<std::string>();
  return out + ")";
}

void print_matrix(std::ostream& out, const json& m, const ProblemFile& f) {
  out << "      ";
  for (const auto& r : f.resources) out << ' ' << r;
  out << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << "  " << f.agents[i] << "   ";
    for (std::size_t r = 0; r < m[i].size(); ++r)
      out << ' ' << std::string(f.resources[r].size() - 1, ' ') << m[i][r];
    out << '\n';
  }
}

// validate ------------------------------------------------------------------

int cmd_validate(const ProblemFile& f, const Options& opt, std::ostream& out) {
  json rep;
  try {
    const auto p = build_problem(f);
    for (const auto& [name, m] : f.allocations) {
      try {
        Allocation::from_matrix(m);
      } catch (const AllocationColumnError& e) {
        rep = {{"status", "invalid"},
               {"error", e.what()},
               {"witness",
                {{"allocation", name},
                 {"column", e.column()},
                 {"resource", f.resources.at(e.column())},
                 {"ones", e.ones()}}}};
        throw;
      }
    }
    rep = {{"status", "valid"},
           {"agents", p.agents()},
           {"resources", p.resources()},
           {"plausibility", std::string(to_string(p.lifting().kind()))},
           {"allocations", json::array()}};
    for (const auto& [name, m] : f.allocations) rep["allocations"].push_back(name);
  } catch (const PreorderValidationError& e) {
    const auto& v = e.violation();
    json w = {{"kind", v.kind == PreorderViolation::Kind::kTotality
                           ? "totality"
                           : "transitivity"}};
    w["indices"] = v.kind == PreorderViolation::Kind::kTotality
                       ? json::array({v.i, v.j})
                       : json::array({v.i, v.j, v.k});
    rep = {{"status", "invalid"}, {"error", e.what()}, {"witness", w}};
  } catch (const AllocationColumnError&) {
    // rep already filled in
  } catch (const Error& e) {
    rep = {{"status", "invalid"}, {"error", e.what()}};
  }

  const bool valid = rep["status"] == "valid";
  if (opt.pretty) {
    if (valid) {
      out << "valid: " << rep["agents"] << " agents, " << rep["resources"]
          << " resources, " << rep["allocations"].size()
          << " named allocations, " << rep["plausibility"].get<std::string>()
          << " plausibility\n";
    } else {
      out << "invalid: " << rep["error"].get<std::string>() << '\n';
      if (rep.contains("witness")) out << "witness: " << rep["witness"] << '\n';
    }
  } else {
    out << rep.dump(2) << '\n';
  }
  return valid ? kSuccess : kValidationFailure;
}

// compare -------------------------------------------------------------------

int cmd_compare(const ProblemFile& f, const Options& opt, std::ostream& out) {
  const auto p = build_problem(f);
  const auto left = named_allocation(f, opt.left);
  const auto right = named_allocation(f, opt.right);
  const auto rep = welfare_compare(p, left, right);
  json doc = {{"left", opt.left},
              {"right", opt.right},
              {"diff", names_of(rep.diff, f.resources)},
              {"left_dominates", names_of(rep.left_dominates, f.resources)},
              {"right_dominates", names_of(rep.right_dominates, f.resources)},
              {"verdict", std::string(to_string(rep.verdict))}};
  if (opt.pretty) {
    out << opt.left << " vs " << opt.right << ": "
        << doc["verdict"].get<std::string>() << '\n'
        << "  D              = " << join(doc["diff"]) << '\n'
        << "  [" << opt.left << " > " << opt.right
        << "] = " << join(doc["left_dominates"]) << '\n'
        << "  [" << opt.right << " > " << opt.left
        << "] = " << join(doc["right_dominates"]) << '\n';
  } else {
    out << doc.dump(2) << '\n';
  }
  return kSuccess;
}

// good ----------------------------------------------------------------------

int cmd_good(const ProblemFile& f, const Options& opt, std::ostream& out,
             std::ostream& err) {
  const auto p = build_problem(f);
  std::optional<Allocation> start;
  json origin;
  if (opt.uniform_random) {
    std::mt19937_64 rng(opt.seed);
    start = random_allocation(rng, p.agents(), p.resources());
    origin = {{"uniform_random", true}, {"seed", opt.seed}};
  } else if (!opt.start.empty()) {
    start = named_allocation(f, opt.start);
    origin = {{"name", opt.start}};
  } else {
    err << "good: pass --start <name> or --uniform-random --seed <int>\n";
    return kUsageError;
  }

  const auto bad = bad_columns(p, *start);
  const auto trace = to_good(p, *start);
  json steps = json::array();
  for (const auto& d : trace.steps) {
    steps.push_back({{"resource", f.resources.at(d.resource)},
                     {"from", f.agents.at(d.from_agent)},
                     {"to", f.agents.at(d.to_agent)}});
  }
  json bad_names = json::array();
  for (auto r : bad) bad_names.push_back(f.resources.at(r));
  json doc = {{"start", origin},
              {"start_matrix", start->matrix().to_rows()},
              {"bad_columns", bad_names},
              {"steps", steps},
              {"end_matrix", trace.end.matrix().to_rows()},
              {"end_is_good", is_good(p, trace.end)}};
  if (opt.pretty) {
    out << "start allocation:\n";
    print_matrix(out, doc["start_matrix"], f);
    out << "columns not in good position: " << join(bad_names) << '\n';
    if (steps.empty()) out << "already good, no deals\n";
    for (std::size_t s = 0; s < steps.size(); ++s) {
      out << "deal " << s + 1 << ": " << steps[s]["resource"].get<std::string>()
          << " from agent " << steps[s]["from"].get<std::string>()
          << " to agent " << steps[s]["to"].get<std::string>() << '\n';
    }
    out << "good allocation:\n";
    print_matrix(out, doc["end_matrix"], f);
  } else {
    out << doc.dump(2) << '\n';
  }
  return kSuccess;
}

// fair ----------------------------------------------------------------------

int cmd_fair(const ProblemFile& f, const Options& opt, std::ostream& out) {
  const auto p = build_problem(f);
  const auto classes = partition(p);
  json cls_json = json::array();
  for (const auto& c : classes.classes) {
    cls_json.push_back({{"resources", names_of(c.resources, f.resources)},
                        {"agents", names_of(c.agents, f.agents)},
                        {"unrequested", c.unrequested},
                        {"mean", to_fraction_string(class_mean(c))}});
  }
  const auto fair = locally_fair(p);
  json table = json::object();
  for (const auto& [name, m] : f.allocations) {
    const auto a = Allocation::from_matrix(m);
    if (is_good(p, a)) {
      table[name] = {{"good", true},
                     {"gamma", gamma_json(dispersion_vector(p, a, classes))}};
    } else {
      table[name] = {{"good", false}};
    }
  }
  json doc = {{"classes", cls_json},
              {"locally_fair",
               {{"matrix", fair.matrix().to_rows()},
                {"gamma", gamma_json(dispersion_vector(p, fair, classes))}}},
              {"allocations", table}};
  if (opt.pretty) {
    out << "resource classes:\n";
    for (const auto& c : cls_json) {
      out << "  " << join(c["resources"]) << "  A = " << join(c["agents"])
          << "  mean " << c["mean"].get<std::string>()
          << (c["unrequested"].get<bool>() ? "  (nobody requests)" : "")
          << '\n';
    }
    out << "dispersion vectors:\n";
    for (const auto& [name, row] : table.items()) {
      out << "  " << name << ": "
          << (row["good"].get<bool>() ? gamma_text(row["gamma"])
                                      : std::string("not a good allocation"))
          << '\n';
    }
    out << "locally fair allocation, gamma = "
        << gamma_text(doc["locally_fair"]["gamma"]) << ":\n";
    print_matrix(out, doc["locally_fair"]["matrix"], f);
  } else {
    out << doc.dump(2) << '\n';
  }
  return kSuccess;
}

// oracle --------------------------------------------------------------------

int cmd_oracle(const ProblemFile& f, const Options& opt, std::ostream& out) {
  const auto kind = parse_check_kind(opt.check);
  const auto p = build_problem(f);
  OracleBudget budget;
  budget.max_allocations = opt.budget;
  budget.max_pairs = opt.max_pairs;
  budget.seed = opt.seed;
  const auto rep = run_check(kind, p, budget);

  json disc = json::array();
  for (const auto& d : rep.discrepancies)
    disc.push_back({{"kind", d.kind}, {"witness", d.witness}});
  json doc = {{"check", rep.check},
              {"status", rep.passed ? "pass" : "fail"},
              {"stats", rep.stats},
              {"discrepancies", disc}};
  if (opt.pretty) {
    out << rep.check << ": " << (rep.passed ? "pass" : "FAIL") << '\n';
    for (const auto& [k, v] : rep.stats) out << "  " << k << " = " << v << '\n';
    for (const auto& d : rep.discrepancies)
      out << "  " << d.kind << ": " << d.witness << '\n';
  } else {
    out << doc.dump(2) << '\n';
  }
  return rep.passed ? kSuccess : kDiscrepancy;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Qualitative resource allocation: welfare comparison, "
               "negotiation to good allocations, local fairness"};
  app.name(args.empty() ? "qalloc" : args.front());
  app.require_subcommand(1);
  app.add_option("--file", opt.file, "Problem file (JSON)")->required();
  app.add_flag("--pretty", opt.pretty, "Human-readable output");

  auto* validate = app.add_subcommand("validate", "Check a problem file");
  auto* compare =
      app.add_subcommand("compare", "Welfare comparison of two allocations");
  compare->add_option("--left", opt.left)->required();
  compare->add_option("--right", opt.right)->required();
  auto* good =
      app.add_subcommand("good", "Negotiate an allocation to a good one");
  auto* start_opt = good->add_option("--start", opt.start, "Named allocation");
  auto* random_opt = good->add_flag("--uniform-random", opt.uniform_random,
                                    "Start from a uniform random allocation");
  good->add_option("--seed", opt.seed, "Seed for --uniform-random");
  start_opt->excludes(random_opt);
  auto* fair = app.add_subcommand(
      "fair", "Resource classes, dispersion vectors, locally fair allocation");
  auto* oracle =
      app.add_subcommand("oracle", "Brute-force verification of a problem");
  oracle->add_option("--check", opt.check, "good-optimal|partition|trace|fairness")
      ->required()
      ->check(CLI::IsMember({"good-optimal", "partition", "trace", "fairness"}));
  oracle->add_option("--budget", opt.budget, "Maximum number of allocations");
  oracle->add_option("--max-pairs", opt.max_pairs,
                     "Pair-quantified checks sample beyond this many pairs");
  oracle->add_option("--seed", opt.seed, "Sampling seed");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  ProblemFile file;
  try {
    file = load_problem_file(opt.file);
  } catch (const Error& e) {
    err << e.what() << '\n';
    if (validate->parsed()) {
      out << json{{"status", "invalid"}, {"error", e.what()}}.dump(2) << '\n';
    }
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, opt, out);
    if (compare->parsed()) return cmd_compare(file, opt, out);
    if (good->parsed()) return cmd_good(file, opt, out, err);
    if (fair->parsed()) return cmd_fair(file, opt, out);
    if (oracle->parsed()) return cmd_oracle(file, opt, out);
  } catch (const BudgetError& e) {
    err << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    // Unknown allocation names and similar argument problems.
    err << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kValidationFailure;
  }
  return kUsageError;
}

}  // namespace qalloc::cli
