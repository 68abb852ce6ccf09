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

// Named solution concepts: which matchings are admissible and which
// objectives rank them. Shared by the IP pipelines and the brute-force
// oracle so that both read the same definition.

#ifndef QUOTAMATCH_PIPELINES_CONCEPT_H_
#define QUOTAMATCH_PIPELINES_CONCEPT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "quotamatch/core/instance.h"

namespace quotamatch {

enum class ConceptName {
  kMinRankStable,
  kMinDeficiency,
  kAlmostStable,
  kMinRankEf,
  kMinOsbEf,
  kMinEnvyCwtefm,
  kMinEiCwtefm,
  kMinRankMinEnvyCwtefm,
  kMinRankMinEiCwtefm,
  kMinOsbMinEnvyCwtefm,
  kMinOsbMinEiCwtefm,
  kEqualTypeScores,
};

// Canonical spelling, e.g. "MinRank-Min#E-CWTEFM".
std::string_view ConceptNameString(ConceptName name);
std::vector<ConceptName> AllConcepts();
// The concepts solved as lexicographic integer programs (all but
// EqualTypeScores).
std::vector<ConceptName> ProgramConcepts();

struct SolutionConcept {
  ConceptName name = ConceptName::kMinRankStable;
  // Replacement for every company's upper / lower quota.
  std::optional<int> override_upper;
  std::optional<int> override_lower;
  // Weak stability (equal scores never justify replacement). With false, an
  // applicant also blocks against an assignee with an equal score.
  bool ties = true;
  // CWTEFM concepts only: false drops the within-type envy-freeness
  // requirement and counts envy between all pairs instead.
  bool wtef = true;

  friend bool operator==(const SolutionConcept&,
                         const SolutionConcept&) = default;
};

// "MinRank-Stable" or "MinRank-Stable@u=5,l=3"; names are case-insensitive.
absl::StatusOr<SolutionConcept> ParseConcept(std::string_view text);
// Canonical name plus any overrides and non-default flags.
std::string DescribeConcept(const SolutionConcept& concept_);

// The instance the concept is evaluated on.
Instance ApplyOverrides(const Instance& inst, const SolutionConcept& concept_);

enum class Admissibility {
  kAny,
  kStable,
  kEnvyFree,
  kWithinTypeEnvyFree,
};

enum class ObjectiveKind {
  kUnmatched,
  kRank,
  kDeficiency,
  kBlocking,
  kCrossEnvyCount,
  kCrossEnvyIntensity,
  kAllEnvyCount,
  kAllEnvyIntensity,
  kOpenSlot,
};

std::string_view ObjectiveKindName(ObjectiveKind kind);

struct ConceptDefinition {
  Admissibility admissibility = Admissibility::kAny;
  bool strong_stability = false;  // with kStable
  bool complete = false;
  // Minimised in this order.
  std::vector<ObjectiveKind> objectives;
};

// Every concept also requires all declared quotas (company, per-type and
// global). Not defined for EqualTypeScores.
ConceptDefinition DefineConcept(const SolutionConcept& concept_);

bool IsCwtefm(ConceptName name);

}  // namespace quotamatch

#endif  // QUOTAMATCH_PIPELINES_CONCEPT_H_
