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

// Solving a named concept end to end and reporting the result in the shape
// of the programme's comparison tables.

#ifndef QUOTAMATCH_PIPELINES_PIPELINES_H_
#define QUOTAMATCH_PIPELINES_PIPELINES_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "quotamatch/core/diagnostics.h"
#include "quotamatch/core/instance.h"
#include "quotamatch/core/matching.h"
#include "quotamatch/ipmodel/linear_model.h"
#include "quotamatch/pipelines/concept.h"
#include "quotamatch/solver/solver.h"

namespace quotamatch {

// Constraint families in the order the infeasibility probe adds them.
enum class Stage {
  kFeasibility,  // one company per applicant, upper quotas, completeness
  kLowerQuotas,
  kTypeQuotas,
  kGlobalQuotas,
  kConcept,  // stability or envy rows
};

std::string_view StageName(Stage stage);

// Model for a lexicographic concept on an instance with overrides applied,
// containing every family up to and including `last`. Objectives are added
// only with Stage::kConcept.
absl::StatusOr<LinearModel> BuildConceptModel(const Instance& inst,
                                              const SolutionConcept& concept_,
                                              Stage last = Stage::kConcept);

enum class ReportStatus { kOptimal, kInfeasible, kLimitReached, kNotFound };

std::string_view ReportStatusName(ReportStatus status);

struct SolveReport {
  SolutionConcept concept_;
  ReportStatus status = ReportStatus::kInfeasible;
  // kInfeasible: first family whose addition made the model infeasible, or
  // empty when the probe itself ran out of budget.
  std::string infeasible_stage;
  std::string message;

  bool has_matching = false;
  Matching matching;
  // Recomputed from the matching on the overridden instance.
  Diagnostics diagnostics;
  std::vector<std::string> objective_labels;
  std::vector<int64_t> objective_values;
  // EqualTypeScores: bonus per type on the doubled scale.
  std::vector<Score> bonus;
  std::string tie_break;

  SolveStats stats;
  uint64_t instance_hash = 0;
};

// FNV-1a over the instance contents; stable across runs and platforms.
uint64_t InstanceHash(const Instance& inst);

// Errors: InvalidArgument when the overridden instance is invalid;
// FailedPrecondition when EqualTypeScores preconditions fail. Infeasibility
// and limits are reported in SolveReport::status. `search_seed` drives the
// random tie-breaking orders of the EqualTypeScores search.
absl::StatusOr<SolveReport> SolveConcept(const Instance& inst,
                                         const SolutionConcept& concept_,
                                         const SolverConfig& config = {},
                                         uint64_t search_seed = 1);

// One row per concept; rows whose solve failed with an error carry the
// message and status kInfeasible.
std::vector<SolveReport> CompareConcepts(
    const Instance& inst, std::span<const SolutionConcept> concepts,
    const SolverConfig& config = {}, uint64_t search_seed = 1);

// Fixed-width table: concept, status, per-company profile "all/type1...",
// total rank, envy and blocking counts.
std::string FormatReportTable(const Instance& inst,
                              std::span<const SolveReport> reports);

}  // namespace quotamatch

#endif  // QUOTAMATCH_PIPELINES_PIPELINES_H_
