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

#include "quotamatch/oracle/oracle.h"

#include <algorithm>
#include <utility>

#include "absl/strings/str_cat.h"

namespace quotamatch {
namespace {

// Applicant i does not hold c_j or anything it ranks above c_j, and c_j
// would take it: a free seat, or an assignee scored below s_ij (at or below
// when `strong`).
bool Blocks(const Instance& inst, const Matching& m,
            const std::vector<int>& fill, int i, int j, bool strong) {
  if (HoldsAtLeast(inst, m, i, j)) return false;
  if (fill[j] < inst.company(j).upper) return true;
  const Score s = inst.score(i, j);
  for (int a : inst.applications_to(j)) {
    const int h = inst.application(a).applicant;
    if (m.company_of(h) != j) continue;
    const Score t = inst.application(a).score;
    if (t < s || (strong && t == s)) return true;
  }
  return false;
}

}  // namespace

absl::Status CheckBudget(const Instance& inst,
                         const EnumerationBudget& budget) {
  if (inst.num_applicants() > budget.max_applicants) {
    return absl::ResourceExhaustedError(
        absl::StrCat("OutsideBudget: ", inst.num_applicants(),
                     " applicants, budget ", budget.max_applicants));
  }
  if (inst.num_companies() > budget.max_companies) {
    return absl::ResourceExhaustedError(
        absl::StrCat("OutsideBudget: ", inst.num_companies(),
                     " companies, budget ", budget.max_companies));
  }
  int64_t states = 1;
  for (int i = 0; i < inst.num_applicants(); ++i) {
    states *= static_cast<int64_t>(inst.applications_of(i).size()) + 1;
    if (states > budget.max_states) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "OutsideBudget: more than ", budget.max_states, " assignments"));
    }
  }
  return absl::OkStatus();
}

absl::Status ForEachFeasible(
    const Instance& inst, QuotaMode mode, const EnumerationBudget& budget,
    const std::function<bool(const Matching&)>& visit) {
  absl::Status s = CheckBudget(inst, budget);
  if (!s.ok()) return s;
  const int n = inst.num_applicants();
  Matching m(n);
  bool go_on = true;
  std::function<void(int)> rec = [&](int i) {
    if (!go_on) return;
    if (i == n) {
      if (!HasErrors(CheckFeasible(inst, m, mode))) go_on = visit(m);
      return;
    }
    for (int a : inst.applications_of(i)) {
      m.Assign(i, inst.application(a).company);
      rec(i + 1);
      if (!go_on) return;
    }
    m.Unassign(i);
    rec(i + 1);
  };
  rec(0);
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Matching>> EnumerateFeasible(
    const Instance& inst, QuotaMode mode, const EnumerationBudget& budget) {
  std::vector<Matching> out;
  absl::Status s = ForEachFeasible(inst, mode, budget, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  if (!s.ok()) return s;
  return out;
}

bool IsStable(const Instance& inst, const Matching& m, bool strong) {
  const std::vector<int> fill = CompanyFill(inst, m);
  for (const Application& app : inst.applications()) {
    if (Blocks(inst, m, fill, app.applicant, app.company, strong)) return false;
  }
  return true;
}

bool IsEnvyFree(const Instance& inst, const Matching& m) {
  return JustifiedEnvies(inst, m).empty();
}

bool IsWithinTypeEnvyFree(const Instance& inst, const Matching& m) {
  return WithinTypeEnvies(inst, m).empty();
}

int64_t TotalDeficiency(const Instance& inst, const Matching& m) {
  int64_t total = 0;
  for (const Application& app : inst.applications()) {
    if (HoldsAtLeast(inst, m, app.applicant, app.company)) continue;
    int64_t at_least = 0;
    for (int b : inst.applications_to(app.company)) {
      const Application& other = inst.application(b);
      if (m.company_of(other.applicant) == app.company &&
          other.score >= app.score) {
        ++at_least;
      }
    }
    total += std::max<int64_t>(0, inst.company(app.company).upper - at_least);
  }
  return total;
}

int64_t ObjectiveValue(const Instance& inst, const Matching& m,
                       ObjectiveKind kind) {
  auto intensity = [](const std::vector<Envy>& envies) {
    int64_t sum = 0;
    for (const Envy& e : envies) sum += e.intensity;
    return sum;
  };
  switch (kind) {
    case ObjectiveKind::kUnmatched: {
      int64_t count = 0;
      for (int i = 0; i < inst.num_applicants(); ++i) {
        if (!inst.applications_of(i).empty() && !m.is_matched(i)) ++count;
      }
      return count;
    }
    case ObjectiveKind::kRank:
      return TotalRank(inst, m);
    case ObjectiveKind::kDeficiency:
      return TotalDeficiency(inst, m);
    case ObjectiveKind::kBlocking:
      return static_cast<int64_t>(BlockingPairs(inst, m).size());
    case ObjectiveKind::kCrossEnvyCount:
      return static_cast<int64_t>(CrossTypeEnvies(inst, m).size());
    case ObjectiveKind::kCrossEnvyIntensity:
      return intensity(CrossTypeEnvies(inst, m));
    case ObjectiveKind::kAllEnvyCount:
      return static_cast<int64_t>(JustifiedEnvies(inst, m).size());
    case ObjectiveKind::kAllEnvyIntensity:
      return intensity(JustifiedEnvies(inst, m));
    case ObjectiveKind::kOpenSlot:
      return static_cast<int64_t>(OpenSlotBlockings(inst, m).size());
  }
  return 0;
}

bool IsAdmissible(const Instance& inst, const Matching& m,
                  const ConceptDefinition& def) {
  if (HasErrors(CheckFeasible(inst, m, QuotaMode::kWithGlobalTypes))) {
    return false;
  }
  if (def.complete && !IsComplete(inst, m)) return false;
  switch (def.admissibility) {
    case Admissibility::kAny:
      return true;
    case Admissibility::kStable:
      return IsStable(inst, m, def.strong_stability);
    case Admissibility::kEnvyFree:
      return IsEnvyFree(inst, m);
    case Admissibility::kWithinTypeEnvyFree:
      return IsWithinTypeEnvyFree(inst, m);
  }
  return false;
}

absl::StatusOr<OracleOptimum> BruteOptimum(const Instance& raw,
                                           const SolutionConcept& concept_,
                                           const EnumerationBudget& budget) {
  if (concept_.name == ConceptName::kEqualTypeScores) {
    return absl::InvalidArgumentError(
        "EqualTypeScores has no lexicographic objective");
  }
  const Instance inst = ApplyOverrides(raw, concept_);
  const ConceptDefinition def = DefineConcept(concept_);
  OracleOptimum best;
  absl::Status s = ForEachFeasible(
      inst, QuotaMode::kWithGlobalTypes, budget, [&](const Matching& m) {
        if (!IsAdmissible(inst, m, def)) return true;
        ++best.admissible;
        std::vector<int64_t> value;
        for (ObjectiveKind kind : def.objectives) {
          value.push_back(ObjectiveValue(inst, m, kind));
        }
        if (best.optimal.empty() || value < best.value) {
          best.value = std::move(value);
          best.optimal = {m};
        } else if (value == best.value) {
          best.optimal.push_back(m);
        }
        return true;
      });
  if (!s.ok()) return s;
  if (best.optimal.empty()) {
    return absl::NotFoundError(absl::StrCat(
        "NoAdmissibleMatching: no matching is admissible for ",
        DescribeConcept(concept_)));
  }
  return best;
}

}  // namespace quotamatch
