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

// Type-aware constructions: complete within-type envy-free matchings by
// per-type deferred acceptance, their equivalence with stability under
// type-specific scores, and the search for bonuses that are equal across
// companies.

#ifndef QUOTAMATCH_CLASSIC_TYPE_SCORES_H_
#define QUOTAMATCH_CLASSIC_TYPE_SCORES_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "quotamatch/classic/deferred_acceptance.h"
#include "quotamatch/core/instance.h"
#include "quotamatch/core/matching.h"

namespace quotamatch {

// Complete within-type envy-free matching respecting every quota.
//
// Checked assumptions (FailedPrecondition "AssumptionViolated: ..."):
// complete preference lists, per-type lower quotas summing to at most the
// type population, per-company type lower quotas summing to at most the
// upper quota, enough seats for everyone, enough applicants for every
// company's lower quota, global type quotas admitting every applicant, and
// type upper quotas leaving room for every applicant.
absl::StatusOr<Matching> CwtefmConstruct(const Instance& inst);

// Additive bonus per (company, type) on the doubled scale.
struct ScoreAdjustment {
  std::vector<std::vector<Score>> bonus;  // [company][type]

  // The same bonus per type at every company.
  static ScoreAdjustment Uniform(const Instance& inst,
                                 std::span<const Score> per_type);
  bool is_uniform() const;

  friend bool operator==(const ScoreAdjustment&,
                         const ScoreAdjustment&) = default;
};

// Scores of inst.applications() after the adjustment.
std::vector<Score> AdjustedScores(const Instance& inst,
                                  const ScoreAdjustment& adj);

// Bonuses that give the weakest admitted applicant of every type at a
// company the same adjusted score. Types with nobody admitted at a company
// are pushed to or below that score.
ScoreAdjustment AdjustmentFromWtef(const Instance& inst, const Matching& m);

// No blocking pair under the adjusted scores, taking each company's current
// fill as its capacity.
bool VerifyStableWithAdjustment(const Instance& inst, const Matching& m,
                                const ScoreAdjustment& adj);

struct EqualTypeScores {
  std::vector<Score> bonus;  // per type, doubled scale
  TieBreakPolicy policy;
  Matching matching;
  int64_t trials = 0;  // deferred acceptance runs
};

// Two-type walk over bonus e for type 0 and tie-break prefixes, returning
// the first (e, prefix) whose deferred acceptance matching admits exactly
// `type0_target` applicants of type 0. Preconditions: two types, complete
// lists, type0_target within [0, n_0], total seats minus the target within
// [0, n_1], no more companies than applicants, and global type quotas (when
// set) equal to those targets. FailedPrecondition ("PreconditionViolated")
// otherwise; Internal when the step bound between consecutive prefixes is
// broken.
absl::StatusOr<EqualTypeScores> EqualTypeScoreSweep(const Instance& inst,
                                                    int type0_target);

struct EqualScoreSearch {
  // Random priority orders tried for ties, after every order of types.
  int random_orders = 16;
  uint64_t seed = 1;
  int64_t max_trials = 5'000'000;
};

// Any number of types: bonuses for every type but the last, searched over
// the same range in order of increasing total magnitude, each with several
// tie-breaking orders. Accepts the first matching that meets all declared
// quotas. Two-type instances try the sweep first. NotFound when the search
// is exhausted; ResourceExhausted beyond `max_trials`.
absl::StatusOr<EqualTypeScores> FindEqualTypeScores(
    const Instance& inst, const EqualScoreSearch& options = {});

}  // namespace quotamatch

#endif  // QUOTAMATCH_CLASSIC_TYPE_SCORES_H_
