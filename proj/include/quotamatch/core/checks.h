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

// Validation and matching-quality checkers. All functions here are pure and
// operate directly on the instance data; they are the reference predicates
// that the integer-programming and combinatorial paths are tested against.

#ifndef QUOTAMATCH_CORE_CHECKS_H_
#define QUOTAMATCH_CORE_CHECKS_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quotamatch/core/instance.h"
#include "quotamatch/core/matching.h"

namespace quotamatch {

enum class ViolationKind {
  // Instance invariants.
  kQuotaOrder,
  kTypeQuotaOrder,
  kTypeQuotaAboveUpper,
  kGlobalQuotaOrder,
  kTypeTableSize,
  kUnknownType,
  kDanglingPreference,
  kDuplicatePreference,
  kMissingApplication,
  kUnlistedApplication,
  kDuplicateApplication,
  kNegativeScore,
  kEmptyPreferences,  // warning only
  // Matching feasibility.
  kUnknownAssignment,
  kUpperQuota,
  kLowerQuota,
  kTypeUpperQuota,
  kTypeLowerQuota,
  kGlobalTypeUpper,
  kGlobalTypeLower,
};

enum class Severity { kError, kWarning };

struct Violation {
  ViolationKind kind;
  Severity severity = Severity::kError;
  std::string subject;  // e.g. "c3", "a2/c1", "foreign"
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string_view ViolationKindName(ViolationKind kind);
std::string FormatViolation(const Violation& v);
bool HasErrors(std::span<const Violation> violations);

// Reports every broken instance invariant. Applicants with an empty list are
// reported as warnings: they are unmatchable and are exempt from completeness.
std::vector<Violation> ValidateInstance(const Instance& inst);

// Quota families are cumulative: each mode includes the ones before it.
enum class QuotaMode { kUpperOnly, kWithLower, kWithTypes, kWithGlobalTypes };

std::vector<Violation> CheckFeasible(const Instance& inst, const Matching& m,
                                     QuotaMode mode);

// True iff every applicant with a non-empty preference list is assigned.
bool IsComplete(const Instance& inst, const Matching& m);

using Pair = std::pair<int, int>;  // (applicant, company)

// All (a_i, c_j) in E not in m such that a_i is unmatched or prefers c_j, and
// c_j has a free seat or an assignee with a strictly lower score. `ties` is
// accepted for symmetry with the model builders and does not change the
// predicate (this is weak stability). Result is sorted.
std::vector<Pair> BlockingPairs(const Instance& inst, const Matching& m,
                                bool ties = true);

// Blocking pairs whose company has strictly fewer assignees than its upper
// quota.
std::vector<Pair> OpenSlotBlockings(const Instance& inst, const Matching& m);

// Where a company's capacity is taken from when deciding whether a free seat
// exists.
enum class CapacityMode { kUpperQuota, kCurrentFill };

// Blocking pairs under replacement scores, one per application index.
// With kCurrentFill only score-based blockings remain (open seats never
// block), which is stability relative to the matching's own fill.
std::vector<Pair> BlockingPairsWithScores(const Instance& inst,
                                          const Matching& m,
                                          std::span<const Score> scores,
                                          CapacityMode capacity);

struct Envy {
  int envier = 0;
  int envied = 0;
  int company = 0;
  Score intensity = 0;  // s_ij - s_hj on the doubled scale, always > 0

  friend bool operator==(const Envy&, const Envy&) = default;
  friend auto operator<=>(const Envy&, const Envy&) = default;
};

// Justified envies: a_h holds c_j, s_ij > s_hj, and a_i neither holds c_j nor
// a company it prefers to c_j. Sorted.
std::vector<Envy> JustifiedEnvies(const Instance& inst, const Matching& m);
std::vector<Envy> WithinTypeEnvies(const Instance& inst, const Matching& m);
std::vector<Envy> CrossTypeEnvies(const Instance& inst, const Matching& m);

// Sum of ranks over assigned pairs; unmatched applicants contribute 0.
int64_t TotalRank(const Instance& inst, const Matching& m);

// Assignees per company.
std::vector<int> CompanyFill(const Instance& inst, const Matching& m);
// [company][type] assignee counts.
std::vector<std::vector<int>> TypeProfile(const Instance& inst,
                                          const Matching& m);

// True iff a_i holds c_j or a company it ranks above c_j.
bool HoldsAtLeast(const Instance& inst, const Matching& m, int i, int j);

}  // namespace quotamatch

#endif  // QUOTAMATCH_CORE_CHECKS_H_
