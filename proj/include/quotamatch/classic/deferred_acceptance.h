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

// Tie-breaking, applicant-proposing deferred acceptance and the lower-quota
// existence test that follows from the rural hospitals theorem.

#ifndef QUOTAMATCH_CLASSIC_DEFERRED_ACCEPTANCE_H_
#define QUOTAMATCH_CLASSIC_DEFERRED_ACCEPTANCE_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "quotamatch/core/instance.h"
#include "quotamatch/core/matching.h"

namespace quotamatch {

struct TieBreakPolicy {
  enum class Kind {
    kByIndex,
    // Types in `type_order` first (in that order), the rest by index.
    kFavorType,
    // Two types only: the first `prefix` applicants of type 0, then every
    // applicant of type 1, then the remaining applicants of type 0.
    kFavorPrefix,
    // `order` lists every applicant exactly once, highest priority first.
    kExplicitOrder,
  };

  Kind kind = Kind::kByIndex;
  std::vector<int> type_order;
  int prefix = 0;
  std::vector<int> order;

  static TieBreakPolicy ByIndex() { return {}; }
  static TieBreakPolicy FavorType(std::vector<int> types) {
    return {Kind::kFavorType, std::move(types), 0, {}};
  }
  static TieBreakPolicy FavorPrefix(int prefix) {
    return {Kind::kFavorPrefix, {}, prefix, {}};
  }
  static TieBreakPolicy ExplicitOrder(std::vector<int> order) {
    return {Kind::kExplicitOrder, {}, 0, std::move(order)};
  }

  friend bool operator==(const TieBreakPolicy&, const TieBreakPolicy&) = default;
};

std::string DescribePolicy(const TieBreakPolicy& policy);

// Position of every applicant in the policy's priority order (0 = highest).
absl::StatusOr<std::vector<int>> PriorityPositions(const Instance& inst,
                                                   const TieBreakPolicy& policy);

// Strict keys per application: score * n + (n - 1 - position). Comparisons
// between different scores are unchanged; equal scores are ordered by the
// policy. `scores` is indexed like inst.applications() and may be negative.
std::vector<Score> StrictKeys(const Instance& inst,
                              std::span<const Score> scores,
                              std::span<const int> positions);

// Strict instance whose scores refine the original weak order. The original
// score of an application is recovered as new_score / n.
absl::StatusOr<Instance> BreakTies(const Instance& inst,
                                   const TieBreakPolicy& policy);

// True iff no company gives two of its applicants the same score.
bool HasStrictScores(const Instance& inst);

// Applicant-optimal stable matching of a strict instance under the upper
// quotas. FailedPrecondition ("TiesPresent") when some company has ties.
absl::StatusOr<Matching> DeferredAcceptance(const Instance& strict_inst);

// Applicant-proposing deferred acceptance over explicit keys and seats.
// Applicants with active[i] == 0 do not take part. Keys must be distinct
// among the applicants of each company.
Matching DeferredAcceptanceWithKeys(const Instance& inst,
                                    std::span<const Score> keys,
                                    std::span<const int> seats,
                                    std::span<const char> active = {});

struct HrlResult {
  bool exists = false;
  // The deferred acceptance matching; stable, and the answer when `exists`.
  Matching matching;
  // Companies whose stable fill is below their lower quota.
  std::vector<int> deficient;
};

// Lower quotas can be met by a stable matching iff the deferred acceptance
// matching already meets them, since every stable matching fills each
// company equally. FailedPrecondition when scores have ties.
absl::StatusOr<HrlResult> HrlFeasibilityCheck(const Instance& strict_inst);

}  // namespace quotamatch

#endif  // QUOTAMATCH_CLASSIC_DEFERRED_ACCEPTANCE_H_
