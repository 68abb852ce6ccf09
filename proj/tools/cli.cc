// Copyright 2026 The QuotaMatch Authors
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

#include "cli.h"

#include <chrono>
#include <cstdint>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "nlohmann/json.hpp"
#include "quotamatch/core/checks.h"
#include "quotamatch/core/diagnostics.h"
#include "quotamatch/gen/generator.h"
#include "quotamatch/io/formats.h"
#include "quotamatch/oracle/oracle.h"
#include "quotamatch/pipelines/concept.h"
#include "quotamatch/pipelines/pipelines.h"

namespace quotamatch {
namespace {

struct ConceptFlags {
  std::vector<std::string> names;
  bool ties = false;
  bool strict = false;
  std::optional<int> upper;
  std::optional<int> lower;
  bool no_wtef = false;
};

struct SolverFlags {
  bool deterministic = false;
  double time_limit = 600.0;
  int64_t node_limit = 50'000'000;
  uint64_t seed = 1;
};

void AddConceptFlags(CLI::App* cmd, ConceptFlags* f, bool many) {
  if (many) {
    cmd->add_option("--concept", f->names,
                    "Concept, repeatable; defaults to every programme concept");
  } else {
    cmd->add_option("--concept", f->names, "Concept, e.g. MinRank-EF@u=5")
        ->required()
        ->expected(1);
  }
  auto* ties = cmd->add_flag("--ties", f->ties, "Weak stability (default)");
  auto* strict =
      cmd->add_flag("--strict", f->strict, "Equal scores also block");
  ties->excludes(strict);
  cmd->add_option("--override-upper", f->upper, "Upper quota for every company")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--override-lower", f->lower, "Lower quota for every company")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--no-wtef", f->no_wtef,
                "CWTEFM concepts without within-type envy-freeness");
}

void AddSolverFlags(CLI::App* cmd, SolverFlags* f) {
  cmd->add_flag("--deterministic", f->deterministic,
                "Fixed branching order; output is a function of the input");
  cmd->add_option("--time-limit", f->time_limit, "Seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--node-limit", f->node_limit, "Search nodes")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f->seed, "Seed for randomised tie-breaking");
}

SolverConfig MakeConfig(const SolverFlags& f) {
  SolverConfig config;
  config.node_limit = f.node_limit;
  config.time_limit_seconds = f.time_limit;
  config.deterministic = f.deterministic;
  config.branch_rule = f.deterministic ? BranchRule::kFirstUnfixed
                                       : BranchRule::kMostConstrained;
  return config;
}

absl::StatusOr<SolutionConcept> MakeConcept(const std::string& text,
                                            const ConceptFlags& f) {
  auto c = ParseConcept(text);
  if (!c.ok()) return c.status();
  if (f.upper && !c->override_upper) c->override_upper = f.upper;
  if (f.lower && !c->override_lower) c->override_lower = f.lower;
  if (f.strict) c->ties = false;
  if (f.no_wtef && IsCwtefm(c->name)) c->wtef = false;
  return c;
}

absl::StatusOr<std::string> ReadText(const std::string& path) {
  if (path != "-") return ReadFile(path);
  return std::string(std::istreambuf_iterator<char>(std::cin),
                     std::istreambuf_iterator<char>());
}

// Parses and validates; problems are written to `err`.
std::optional<Instance> LoadInstance(const std::string& path,
                                     std::ostream& err) {
  auto text = ReadText(path);
  if (!text.ok()) {
    err << path << ": " << text.status().message() << "\n";
    return std::nullopt;
  }
  auto inst = ParseInstance(*text);
  if (!inst.ok()) {
    err << path << ": " << inst.status().message() << "\n";
    return std::nullopt;
  }
  const std::vector<Violation> violations = ValidateInstance(*inst);
  for (const Violation& v : violations) {
    err << path << ": " << FormatViolation(v) << "\n";
  }
  if (HasErrors(violations)) return std::nullopt;
  return std::move(*inst);
}

int ExitForError(const absl::Status& status) {
  return status.code() == absl::StatusCode::kResourceExhausted ? kExitLimit
                                                               : kExitInvalid;
}

int ExitForStatus(ReportStatus status) {
  switch (status) {
    case ReportStatus::kOptimal: return kExitOk;
    case ReportStatus::kInfeasible: return kExitInfeasible;
    case ReportStatus::kLimitReached:
    case ReportStatus::kNotFound: return kExitLimit;
  }
  return kExitInvalid;
}

void LogReport(const SolveReport& r, double seconds, std::ostream& err) {
  err << DescribeConcept(r.concept_) << ": " << ReportStatusName(r.status);
  if (!r.infeasible_stage.empty()) err << " at " << r.infeasible_stage;
  err << " (" << r.stats.nodes << " nodes";
  if (seconds >= 0) err << ", " << seconds << " s";
  err << ")";
  if (!r.message.empty()) err << ": " << r.message;
  err << "\n";
}

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

int CmdValidate(const std::string& path, std::ostream& out,
                std::ostream& err) {
  const auto inst = LoadInstance(path, err);
  if (!inst) return kExitInvalid;
  out << "valid " << inst->num_applicants() << " applicants, "
      << inst->num_companies() << " companies, " << inst->num_types()
      << " types\n";
  return kExitOk;
}

int CmdSolve(const std::string& path, const ConceptFlags& cf,
             const SolverFlags& sf, const std::string& format,
             std::ostream& out, std::ostream& err) {
  const auto inst = LoadInstance(path, err);
  if (!inst) return kExitInvalid;
  auto c = MakeConcept(cf.names.front(), cf);
  if (!c.ok()) {
    err << c.status().message() << "\n";
    return kExitUsage;
  }
  const auto start = std::chrono::steady_clock::now();
  auto r = SolveConcept(*inst, *c, MakeConfig(sf), sf.seed);
  if (!r.ok()) {
    err << DescribeConcept(*c) << ": " << r.status().message() << "\n";
    return ExitForError(r.status());
  }
  LogReport(*r, SecondsSince(start), err);
  out << (format == "records" ? EmitRecords(*inst, {&*r, 1})
                              : EmitMatchingFile(*inst, *r));
  return ExitForStatus(r->status);
}

int CmdCompare(const std::string& path, const ConceptFlags& cf,
               const SolverFlags& sf, const std::string& format,
               std::ostream& out, std::ostream& err) {
  const auto inst = LoadInstance(path, err);
  if (!inst) return kExitInvalid;
  std::vector<SolutionConcept> concepts;
  std::vector<std::string> names = cf.names;
  if (names.empty()) {
    for (ConceptName name : ProgramConcepts()) {
      names.emplace_back(ConceptNameString(name));
    }
  }
  for (const std::string& name : names) {
    auto c = MakeConcept(name, cf);
    if (!c.ok()) {
      err << c.status().message() << "\n";
      return kExitUsage;
    }
    concepts.push_back(*c);
  }
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SolveReport> rows =
      CompareConcepts(*inst, concepts, MakeConfig(sf), sf.seed);
  for (const SolveReport& r : rows) LogReport(r, -1, err);
  err << rows.size() << " concepts in " << SecondsSince(start) << " s\n";
  out << (format == "records" ? EmitRecords(*inst, rows)
                              : FormatReportTable(*inst, rows));
  return kExitOk;
}

bool LooksLikeRecords(const std::string& text) {
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '[') return false;
  const size_t next = text.find_first_not_of(" \t\r\n", first + 1);
  return next != std::string::npos && (text[next] == '{' || text[next] == ']');
}

int CmdCheck(const std::string& inst_path, const std::string& matching_path,
             std::ostream& out, std::ostream& err) {
  const auto inst = LoadInstance(inst_path, err);
  if (!inst) return kExitInvalid;
  auto text = ReadText(matching_path);
  if (!text.ok()) {
    err << matching_path << ": " << text.status().message() << "\n";
    return kExitInvalid;
  }
  auto doc = LooksLikeRecords(*text) ? ParseMatchingRecords(*text)
                                     : ParseMatchingDocument(*text);
  if (!doc.ok()) {
    err << matching_path << ": " << doc.status().message() << "\n";
    return kExitInvalid;
  }
  auto c = DocumentConcept(*doc);
  if (!c.ok()) {
    err << matching_path << ": " << c.status().message() << "\n";
    return kExitInvalid;
  }
  const Instance eval = ApplyOverrides(*inst, *c);
  if (HasErrors(ValidateInstance(eval))) {
    err << matching_path << ": quota overrides give an invalid instance\n";
    return kExitInvalid;
  }
  auto m = ResolveMatching(eval, *doc);
  if (!m.ok()) {
    err << matching_path << ": " << m.status().message() << "\n";
    return kExitInvalid;
  }

  int problems = 0;
  for (const Violation& v :
       CheckFeasible(eval, *m, QuotaMode::kWithGlobalTypes)) {
    err << "infeasible: " << FormatViolation(v) << "\n";
    if (v.severity == Severity::kError) ++problems;
  }
  const auto hash = doc->header.find("instance");
  const std::string expected =
      absl::StrCat(absl::Hex(InstanceHash(*inst), absl::kZeroPad16));
  if (hash != doc->header.end() && hash->second != expected) {
    err << "instance: file says " << hash->second << ", recomputed "
        << expected << "\n";
    ++problems;
  }
  for (const std::string& d : DiagnosticDiscrepancies(eval, *m, *doc)) {
    err << d << "\n";
    ++problems;
  }
  for (const auto& [key, value] :
       DiagnosticLines(eval, ComputeDiagnostics(eval, *m))) {
    out << key << " " << value << "\n";
  }
  err << problems << " discrepancies\n";
  return problems == 0 ? kExitOk : kExitInvalid;
}

std::string MatchingLine(const Instance& inst, const Matching& m) {
  std::vector<std::string> parts;
  for (int i = 0; i < inst.num_applicants(); ++i) {
    parts.push_back(absl::StrCat(
        inst.applicant(i).name, ":",
        m.is_matched(i) ? inst.company(m.company_of(i)).name : "-"));
  }
  return absl::StrJoin(parts, " ");
}

int CmdEnumerate(const std::string& path, const ConceptFlags& cf,
                 const std::string& format, std::ostream& out,
                 std::ostream& err) {
  const auto inst = LoadInstance(path, err);
  if (!inst) return kExitInvalid;
  auto c = MakeConcept(cf.names.front(), cf);
  if (!c.ok()) {
    err << c.status().message() << "\n";
    return kExitUsage;
  }
  if (c->name == ConceptName::kEqualTypeScores) {
    err << "enumerate supports the lexicographic concepts only\n";
    return kExitUsage;
  }
  auto best = BruteOptimum(*inst, *c);
  if (!best.ok()) {
    err << DescribeConcept(*c) << ": " << best.status().message() << "\n";
    if (best.status().code() == absl::StatusCode::kNotFound) {
      return kExitInfeasible;
    }
    return ExitForError(best.status());
  }
  const Instance eval = ApplyOverrides(*inst, *c);
  const ConceptDefinition def = DefineConcept(*c);
  if (format == "records") {
    nlohmann::ordered_json rec;
    rec["concept"] = DescribeConcept(*c);
    rec["admissible"] = best->admissible;
    nlohmann::ordered_json objectives = nlohmann::ordered_json::object();
    for (size_t k = 0; k < def.objectives.size(); ++k) {
      objectives[std::string(ObjectiveKindName(def.objectives[k]))] =
          best->value[k];
    }
    rec["objectives"] = objectives;
    nlohmann::ordered_json optimal = nlohmann::ordered_json::array();
    for (const Matching& m : best->optimal) {
      nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
      for (const auto& [i, j] : m.Pairs()) {
        pairs.push_back({eval.applicant(i).name, eval.company(j).name});
      }
      optimal.push_back(pairs);
    }
    rec["optimal"] = optimal;
    out << rec.dump(2) << "\n";
    return kExitOk;
  }
  out << "concept " << DescribeConcept(*c) << "\n"
      << "admissible " << best->admissible << "\n";
  for (size_t k = 0; k < def.objectives.size(); ++k) {
    out << "objective " << ObjectiveKindName(def.objectives[k]) << " "
        << best->value[k] << "\n";
  }
  out << "optimal " << best->optimal.size() << "\n\n[optimal]\n";
  for (const Matching& m : best->optimal) {
    out << MatchingLine(eval, m) << "\n";
  }
  return kExitOk;
}

struct GenFlags {
  std::string shape = "uniform";
  GenParams p;
};

void AddGenFlags(CLI::App* cmd, GenFlags* g) {
  GenParams& p = g->p;
  cmd->add_option("--shape", g->shape, "uniform, 2016, 2017 or workshop");
  cmd->add_option("-n,--applicants", p.num_applicants)
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("-m,--companies", p.num_companies)
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--types", p.type_names, "Type names")->delimiter(',');
  cmd->add_option("--type-counts", p.type_counts, "Applicants per type")
      ->delimiter(',');
  cmd->add_option("--min-score", p.min_score);
  cmd->add_option("--max-score", p.max_score);
  cmd->add_option("--half-point", p.half_point_prob,
                  "Probability of a half-point score")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--tie-density", p.tie_density)->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--lower", p.lower)->check(CLI::NonNegativeNumber);
  cmd->add_option("--upper", p.upper)->check(CLI::NonNegativeNumber);
  cmd->add_option("--type-lower", p.type_lower, "Per company, one per type")
      ->delimiter(',');
  cmd->add_option("--type-upper", p.type_upper, "Per company, one per type")
      ->delimiter(',');
  cmd->add_option("--global-lower", p.global_lower, "One per type")
      ->delimiter(',');
  cmd->add_option("--global-upper", p.global_upper, "One per type")
      ->delimiter(',');
  cmd->add_option("--preselected", p.preselected,
                  "Workshop seats filled in advance")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--min-list", p.min_list_length,
                  "Shortest preference list with --partial-lists");
  cmd->add_option("--popularity", p.popularity)
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", p.seed);
}

int CmdGenerate(CLI::App* cmd, const GenFlags& g, bool partial,
                std::ostream& out, std::ostream& err) {
  const auto profile = ParseQuotaProfile(g.shape);
  if (!profile) {
    err << "unknown shape '" << g.shape << "'\n";
    return kExitUsage;
  }
  // Start from the shape, then let explicit flags win.
  GenParams p = ApplyShape(GenParams{}, *profile);
  const GenParams& f = g.p;
  auto given = [cmd](const char* name) { return cmd->count(name) > 0; };
  if (given("--applicants")) p.num_applicants = f.num_applicants;
  if (given("--companies")) p.num_companies = f.num_companies;
  if (given("--types")) p.type_names = f.type_names;
  if (given("--type-counts")) p.type_counts = f.type_counts;
  if (given("--min-score")) p.min_score = f.min_score;
  if (given("--max-score")) p.max_score = f.max_score;
  if (given("--half-point")) p.half_point_prob = f.half_point_prob;
  if (given("--tie-density")) p.tie_density = f.tie_density;
  if (given("--lower")) p.lower = f.lower;
  if (given("--upper")) p.upper = f.upper;
  if (given("--type-lower")) p.type_lower = f.type_lower;
  if (given("--type-upper")) p.type_upper = f.type_upper;
  if (given("--global-lower")) p.global_lower = f.global_lower;
  if (given("--global-upper")) p.global_upper = f.global_upper;
  if (given("--preselected")) p.preselected = f.preselected;
  if (given("--min-list")) p.min_list_length = f.min_list_length;
  if (given("--popularity")) p.popularity = f.popularity;
  if (given("--seed")) p.seed = f.seed;
  p.full_lists = !partial;
  auto inst = Generate(p);
  if (!inst.ok()) {
    err << inst.status().message() << "\n";
    return kExitUsage;
  }
  for (const Violation& v : ValidateInstance(*inst)) {
    err << "generated: " << FormatViolation(v) << "\n";
  }
  out << EmitInstance(*inst);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact matching under distributional constraints",
               "quotamatch"};
  app.require_subcommand(1);

  std::string path;
  std::string matching_path;
  std::string format = "table";
  ConceptFlags cf;
  SolverFlags sf;
  GenFlags gf;
  bool partial = false;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "table or records")
        ->check(CLI::IsMember({"table", "records"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("instance", path)->required();

  CLI::App* solve = app.add_subcommand("solve", "Solve one concept");
  solve->add_option("instance", path)->required();
  AddConceptFlags(solve, &cf, false);
  AddSolverFlags(solve, &sf);
  add_format(solve);

  CLI::App* check =
      app.add_subcommand("check", "Recompute a matching file's diagnostics");
  check->add_option("instance", path)->required();
  check->add_option("matching", matching_path)->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List every optimum by brute force");
  enumerate->add_option("instance", path)->required();
  AddConceptFlags(enumerate, &cf, false);
  add_format(enumerate);

  CLI::App* generate = app.add_subcommand("generate", "Write a random instance");
  AddGenFlags(generate, &gf);
  generate->add_flag("--partial-lists", partial,
                     "Applicants list a random subset of companies");

  CLI::App* compare =
      app.add_subcommand("compare", "Solve several concepts side by side");
  compare->add_option("instance", path)->required();
  AddConceptFlags(compare, &cf, true);
  AddSolverFlags(compare, &sf);
  add_format(compare);

  std::vector<const char*> argv = {"quotamatch"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  if (validate->parsed()) return CmdValidate(path, out, err);
  if (solve->parsed()) return CmdSolve(path, cf, sf, format, out, err);
  if (check->parsed()) return CmdCheck(path, matching_path, out, err);
  if (enumerate->parsed()) return CmdEnumerate(path, cf, format, out, err);
  if (generate->parsed()) return CmdGenerate(generate, gf, partial, out, err);
  if (compare->parsed()) return CmdCompare(path, cf, sf, format, out, err);
  return kExitUsage;
}

}  // namespace quotamatch
