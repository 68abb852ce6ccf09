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

#include "quotamatch/pipelines/pipelines.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "quotamatch/classic/type_scores.h"
#include "quotamatch/core/checks.h"
#include "quotamatch/ipmodel/builders.h"
#include "quotamatch/oracle/oracle.h"

namespace quotamatch {
namespace {

constexpr Stage kStages[] = {Stage::kFeasibility, Stage::kLowerQuotas,
                             Stage::kTypeQuotas, Stage::kGlobalQuotas,
                             Stage::kConcept};

void AddObjective(LinearModel& model, const Instance& inst,
                  ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kUnmatched:
      AddUnmatchedObjective(model, inst);
      break;
    case ObjectiveKind::kRank:
      AddRankObjective(model, inst);
      break;
    case ObjectiveKind::kDeficiency:
      AddMinDeficiency(model, inst);
      break;
    case ObjectiveKind::kBlocking:
      AddAlmostStable(model, inst);
      break;
    case ObjectiveKind::kCrossEnvyCount:
      AddCrossTypeEnvyTracking(model, inst, EnvyWeight::kCount);
      break;
    case ObjectiveKind::kCrossEnvyIntensity:
      AddCrossTypeEnvyTracking(model, inst, EnvyWeight::kIntensity);
      break;
    case ObjectiveKind::kAllEnvyCount:
      AddCrossTypeEnvyTracking(model, inst, EnvyWeight::kCount, true);
      break;
    case ObjectiveKind::kAllEnvyIntensity:
      AddCrossTypeEnvyTracking(model, inst, EnvyWeight::kIntensity, true);
      break;
    case ObjectiveKind::kOpenSlot:
      AddOpenSlotCounting(model, inst);
      break;
  }
}

void Mix(uint64_t& h, uint64_t value) {
  for (int b = 0; b < 8; ++b) {
    h ^= (value >> (8 * b)) & 0xff;
    h *= 0x100000001b3ULL;
  }
}

void Mix(uint64_t& h, std::string_view text) {
  Mix(h, static_cast<uint64_t>(text.size()));
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
}

void Mix(uint64_t& h, const std::vector<int>& values) {
  Mix(h, static_cast<uint64_t>(values.size()));
  for (int v : values) Mix(h, static_cast<uint64_t>(static_cast<int64_t>(v)));
}

ReportStatus FromSolveStatus(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return ReportStatus::kOptimal;
    case SolveStatus::kInfeasible:
      return ReportStatus::kInfeasible;
    case SolveStatus::kLimitReached:
      return ReportStatus::kLimitReached;
  }
  return ReportStatus::kInfeasible;
}

void AddAdmissibility(LinearModel& model, const Instance& inst,
                      const ConceptDefinition& def) {
  switch (def.admissibility) {
    case Admissibility::kAny:
      break;
    case Admissibility::kStable:
      AddStability(model, inst, !def.strong_stability);
      break;
    case Admissibility::kEnvyFree:
      AddEnvyFree(model, inst);
      break;
    case Admissibility::kWithinTypeEnvyFree:
      AddWithinTypeEnvyFree(model, inst);
      break;
  }
}

void Probe(const Instance& inst, const SolutionConcept& concept_,
           const SolverConfig& config, SolveReport& report) {
  for (Stage stage : kStages) {
    // The concept stage keeps only admissibility rows: objective-tracking
    // rows never cut off a matching.
    LinearModel model = *BuildConceptModel(
        inst, concept_, std::min(stage, Stage::kGlobalQuotas));
    if (stage == Stage::kConcept) {
      AddAdmissibility(model, inst, DefineConcept(concept_));
    }
    const SolveOutcome out = Solve(model, config);
    report.stats.nodes += out.stats.nodes;
    report.stats.propagations += out.stats.propagations;
    if (out.status == SolveStatus::kInfeasible) {
      report.infeasible_stage = std::string(StageName(stage));
      return;
    }
    if (out.status == SolveStatus::kLimitReached) {
      report.message = "infeasibility probe reached its limit";
      return;
    }
  }
  report.message = "probe found every family feasible";
}

void FillFromMatching(const Instance& inst, SolveReport& report) {
  report.has_matching = true;
  report.diagnostics = ComputeDiagnostics(inst, report.matching);
  if (report.concept_.name == ConceptName::kEqualTypeScores) return;
  const ConceptDefinition def = DefineConcept(report.concept_);
  report.objective_labels.clear();
  report.objective_values.clear();
  for (ObjectiveKind kind : def.objectives) {
    report.objective_labels.emplace_back(ObjectiveKindName(kind));
    report.objective_values.push_back(
        ObjectiveValue(inst, report.matching, kind));
  }
}

absl::StatusOr<SolveReport> SolveEqualTypeScores(const Instance& inst,
                                                 uint64_t seed,
                                                 SolveReport report) {
  EqualScoreSearch search;
  search.seed = seed;
  absl::StatusOr<EqualTypeScores> found = FindEqualTypeScores(inst, search);
  if (!found.ok()) {
    switch (found.status().code()) {
      case absl::StatusCode::kNotFound:
        report.status = ReportStatus::kNotFound;
        report.message = std::string(found.status().message());
        return report;
      case absl::StatusCode::kResourceExhausted:
        report.status = ReportStatus::kLimitReached;
        report.message = std::string(found.status().message());
        return report;
      default:
        return found.status();
    }
  }
  report.status = ReportStatus::kOptimal;
  report.matching = found->matching;
  report.bonus = found->bonus;
  report.tie_break = DescribePolicy(found->policy);
  report.stats.nodes = found->trials;
  FillFromMatching(inst, report);
  return report;
}

}  // namespace

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kFeasibility:
      return "feasibility";
    case Stage::kLowerQuotas:
      return "lower-quotas";
    case Stage::kTypeQuotas:
      return "type-quotas";
    case Stage::kGlobalQuotas:
      return "global-quotas";
    case Stage::kConcept:
      return "stability-envy";
  }
  return "?";
}

std::string_view ReportStatusName(ReportStatus status) {
  switch (status) {
    case ReportStatus::kOptimal:
      return "Optimal";
    case ReportStatus::kInfeasible:
      return "Infeasible";
    case ReportStatus::kLimitReached:
      return "LimitReached";
    case ReportStatus::kNotFound:
      return "NotFound";
  }
  return "?";
}

absl::StatusOr<LinearModel> BuildConceptModel(const Instance& inst,
                                              const SolutionConcept& concept_,
                                              Stage last) {
  if (concept_.name == ConceptName::kEqualTypeScores) {
    return absl::InvalidArgumentError(
        "EqualTypeScores is not solved as an integer program");
  }
  const ConceptDefinition def = DefineConcept(concept_);
  LinearModel model = BuildFeasibility(inst);
  if (def.complete) RequireComplete(model, inst);
  if (last >= Stage::kLowerQuotas) AddLowerQuotas(model, inst);
  if (last >= Stage::kTypeQuotas) AddTypeQuotas(model, inst);
  if (last >= Stage::kGlobalQuotas) AddGlobalTypeQuotas(model, inst);
  if (last < Stage::kConcept) return model;
  AddAdmissibility(model, inst, def);
  for (ObjectiveKind kind : def.objectives) AddObjective(model, inst, kind);
  return model;
}

uint64_t InstanceHash(const Instance& inst) {
  uint64_t h = 0xcbf29ce484222325ULL;
  Mix(h, static_cast<uint64_t>(inst.num_types()));
  for (const std::string& t : inst.type_names()) Mix(h, t);
  Mix(h, static_cast<uint64_t>(inst.num_applicants()));
  for (const Applicant& a : inst.applicants()) {
    Mix(h, a.name);
    Mix(h, static_cast<uint64_t>(a.type));
    Mix(h, a.preferences);
  }
  Mix(h, static_cast<uint64_t>(inst.num_companies()));
  for (const Company& c : inst.companies()) {
    Mix(h, c.name);
    Mix(h, static_cast<uint64_t>(c.lower));
    Mix(h, static_cast<uint64_t>(c.upper));
    Mix(h, c.type_lower);
    Mix(h, c.type_upper);
  }
  // Scores in applicant-then-preference order, independent of input order.
  for (int i = 0; i < inst.num_applicants(); ++i) {
    for (int a : inst.applications_of(i)) {
      Mix(h, static_cast<uint64_t>(inst.application(a).score));
    }
  }
  Mix(h, inst.global_type_lower());
  Mix(h, inst.global_type_upper());
  return h;
}

absl::StatusOr<SolveReport> SolveConcept(const Instance& raw,
                                         const SolutionConcept& concept_,
                                         const SolverConfig& config,
                                         uint64_t search_seed) {
  const Instance inst = ApplyOverrides(raw, concept_);
  const std::vector<Violation> invalid = ValidateInstance(inst);
  if (HasErrors(invalid)) {
    std::vector<std::string> lines;
    for (const Violation& v : invalid) {
      if (v.severity == Severity::kError) lines.push_back(FormatViolation(v));
    }
    return absl::InvalidArgumentError(absl::StrCat(
        "instance invalid for ", DescribeConcept(concept_), ": ",
        absl::StrJoin(lines, "; ")));
  }
  SolveReport report;
  report.concept_ = concept_;
  report.instance_hash = InstanceHash(raw);
  if (concept_.name == ConceptName::kEqualTypeScores) {
    return SolveEqualTypeScores(inst, search_seed, std::move(report));
  }
  absl::StatusOr<LinearModel> model = BuildConceptModel(inst, concept_);
  if (!model.ok()) return model.status();
  const SolveOutcome out = SolveLexicographic(*model, config);
  report.stats = out.stats;
  report.status = FromSolveStatus(out.status);
  if (out.status == SolveStatus::kInfeasible) {
    Probe(inst, concept_, config, report);
    return report;
  }
  if (!out.has_assignment()) {
    report.message = "limit reached without an incumbent";
    return report;
  }
  report.matching = MatchingFromAssignment(*model, out.assignment);
  FillFromMatching(inst, report);
  if (out.status == SolveStatus::kOptimal &&
      report.objective_values != out.objective_values) {
    return absl::InternalError(absl::StrCat(
        "objective values recomputed from the matching (",
        absl::StrJoin(report.objective_values, ","),
        ") differ from the solver's (", absl::StrJoin(out.objective_values, ","),
        ")"));
  }
  return report;
}

std::vector<SolveReport> CompareConcepts(
    const Instance& inst, std::span<const SolutionConcept> concepts,
    const SolverConfig& config, uint64_t search_seed) {
  std::vector<SolveReport> rows;
  for (const SolutionConcept& c : concepts) {
    absl::StatusOr<SolveReport> r = SolveConcept(inst, c, config, search_seed);
    if (r.ok()) {
      rows.push_back(*std::move(r));
      continue;
    }
    SolveReport failed;
    failed.concept_ = c;
    failed.status = ReportStatus::kInfeasible;
    failed.message = std::string(r.status().message());
    failed.instance_hash = InstanceHash(inst);
    rows.push_back(std::move(failed));
  }
  return rows;
}

std::string FormatReportTable(const Instance& inst,
                              std::span<const SolveReport> reports) {
  std::vector<std::string> header = {"concept", "status"};
  for (const Company& c : inst.companies()) header.push_back(c.name);
  for (const char* col : {"rank", "wt-envy", "ct-envy", "ct-EI", "blocking",
                          "open-slot"}) {
    header.emplace_back(col);
  }
  std::vector<std::vector<std::string>> rows = {header};
  for (const SolveReport& r : reports) {
    std::vector<std::string> row = {DescribeConcept(r.concept_),
                                    std::string(ReportStatusName(r.status))};
    if (!r.infeasible_stage.empty()) {
      absl::StrAppend(&row[1], "(", r.infeasible_stage, ")");
    }
    for (int j = 0; j < inst.num_companies(); ++j) {
      if (!r.has_matching) {
        row.emplace_back("-");
        continue;
      }
      std::string cell = absl::StrCat(r.diagnostics.fill[j]);
      for (int k = 1; k < inst.num_types(); ++k) {
        absl::StrAppend(&cell, "/", r.diagnostics.type_profile[j][k]);
      }
      row.push_back(std::move(cell));
    }
    if (r.has_matching) {
      const Diagnostics& d = r.diagnostics;
      row.push_back(absl::StrCat(d.total_rank));
      row.push_back(absl::StrCat(d.within_type_envies));
      row.push_back(absl::StrCat(d.cross_type_envies));
      // Intensity back on the published half-point scale.
      row.push_back(absl::StrFormat("%g", d.cross_type_intensity / 2.0));
      row.push_back(absl::StrCat(d.blocking_pairs));
      row.push_back(absl::StrCat(d.open_slot_blockings));
    } else {
      row.insert(row.end(), 6, "-");
    }
    rows.push_back(std::move(row));
  }
  std::vector<size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - row[c].size(), ' ');
      if (c == 0) {
        absl::StrAppend(&out, row[c], pad);
      } else {
        absl::StrAppend(&out, "  ", pad, row[c]);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace quotamatch
