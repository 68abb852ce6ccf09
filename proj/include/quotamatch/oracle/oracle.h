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

// Exhaustive enumeration for desk-size instances. Everything here is
// computed from the core checkers, never from a linear model.

#ifndef QUOTAMATCH_ORACLE_ORACLE_H_
#define QUOTAMATCH_ORACLE_ORACLE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "quotamatch/core/checks.h"
#include "quotamatch/core/instance.h"
#include "quotamatch/core/matching.h"
#include "quotamatch/pipelines/concept.h"

namespace quotamatch {

struct EnumerationBudget {
  int max_applicants = 6;
  int max_companies = 3;
  // Cap on the size of the product space (list length + 1 per applicant).
  int64_t max_states = 1'000'000;
};

// OK, or ResourceExhausted naming the exceeded bound.
absl::Status CheckBudget(const Instance& inst, const EnumerationBudget& budget);

// Calls `visit` for every matching that passes CheckFeasible under `mode`,
// until it returns false. Applicants are branched in ascending order, each
// over its listed companies in preference order and then "unmatched".
absl::Status ForEachFeasible(const Instance& inst, QuotaMode mode,
                             const EnumerationBudget& budget,
                             const std::function<bool(const Matching&)>& visit);

absl::StatusOr<std::vector<Matching>> EnumerateFeasible(
    const Instance& inst, QuotaMode mode, const EnumerationBudget& budget = {});

// No blocking pair. `strong` also lets an applicant block against an
// assignee with an equal score.
bool IsStable(const Instance& inst, const Matching& m, bool strong = false);
bool IsEnvyFree(const Instance& inst, const Matching& m);
bool IsWithinTypeEnvyFree(const Instance& inst, const Matching& m);

// Sum over applications (i, j) that a_i does not hold at least as well of
// max(0, u_j - #{assignees of c_j scored at least s_ij}).
int64_t TotalDeficiency(const Instance& inst, const Matching& m);

int64_t ObjectiveValue(const Instance& inst, const Matching& m,
                       ObjectiveKind kind);

// Admissible for the concept on `inst` (overrides already applied): all
// declared quotas, completeness when required, and the stability or envy
// condition.
bool IsAdmissible(const Instance& inst, const Matching& m,
                  const ConceptDefinition& def);

struct OracleOptimum {
  std::vector<int64_t> value;  // one entry per concept objective
  std::vector<Matching> optimal;  // enumeration order
  int64_t admissible = 0;
};

// Lexicographic optimum of the concept over all admissible matchings.
// NotFound ("NoAdmissibleMatching") when none is admissible.
absl::StatusOr<OracleOptimum> BruteOptimum(
    const Instance& inst, const SolutionConcept& concept_,
    const EnumerationBudget& budget = {});

}  // namespace quotamatch

#endif  // QUOTAMATCH_ORACLE_ORACLE_H_
