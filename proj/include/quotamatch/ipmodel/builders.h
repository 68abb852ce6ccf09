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

// Builders that compile an Instance into a 0-1 LinearModel. Each builder adds
// one family of rows; callers compose them into a solution concept.
//
// Notation used in comments: x_ij is the match variable of application
// (a_i, c_j), r_ij its rank, s_ij its score, u_j / l_j the company quotas.
// "Better-or-equal" for (i, j) means the set {x_ik : r_ik <= r_ij}.

#ifndef QUOTAMATCH_IPMODEL_BUILDERS_H_
#define QUOTAMATCH_IPMODEL_BUILDERS_H_

#include <cstdint>
#include <vector>

#include "quotamatch/core/instance.h"
#include "quotamatch/core/matching.h"
#include "quotamatch/ipmodel/linear_model.h"

namespace quotamatch {

// Match variables (applicant order, then preference order) with one
// "at most one company" row per applicant and one upper-quota row per
// company.
LinearModel BuildFeasibility(const Instance& inst, bool prune_vacuous = true);

// BuildFeasibility() plus one stability row per application:
//   u_j * sum(better-or-equal) + sum_{h: s_hj > s_ij} x_hj >= u_j   (strict)
// or with s_hj >= s_ij when `ties` is true (weak stability).
LinearModel BuildBase(const Instance& inst, bool ties,
                      bool prune_vacuous = true);

void AddStability(LinearModel& model, const Instance& inst, bool ties);

// Turns the applicant rows into equalities for applicants with at least one
// application.
void RequireComplete(LinearModel& model, const Instance& inst);

void AddLowerQuotas(LinearModel& model, const Instance& inst);
void AddTypeQuotas(LinearModel& model, const Instance& inst);
void AddGlobalTypeQuotas(LinearModel& model, const Instance& inst);

// Replaces the weak stability rows with ones that carry an integer deficiency
// d_ij in [0, u_j]; minimises sum d_ij.
ObjectiveHandle AddMinDeficiency(LinearModel& model, const Instance& inst);

// Replaces the weak stability rows with ones that carry a binary d_ij scaled
// by u_j; sum d_ij counts blocking pairs.
ObjectiveHandle AddAlmostStable(LinearModel& model, const Instance& inst);

// sum(better-or-equal of (i, j)) >= x_hj whenever s_ij > s_hj.
void AddEnvyFree(LinearModel& model, const Instance& inst);
// Same rows restricted to applicants of equal type.
void AddWithinTypeEnvyFree(LinearModel& model, const Instance& inst);

enum class EnvyWeight { kCount, kIntensity };

// sum(better-or-equal of (i, j)) + e_ihj >= x_hj for ordered pairs of
// applicants of different types applying to the same company, with e binary.
// Weight of e_ihj is 1 (count) or s_ij - s_hj (intensity) when s_ij > s_hj,
// and 0 otherwise; zero-weight rows are pruned unless pruning is disabled.
// `include_same_type` extends the rows to all pairs (within-type envy is then
// penalised instead of forbidden).
ObjectiveHandle AddCrossTypeEnvyTracking(LinearModel& model,
                                         const Instance& inst,
                                         EnvyWeight weight,
                                         bool include_same_type = false);

// (sum(better-or-equal) + o_ij) * u_j + sum_h x_hj >= u_j with binary o_ij;
// sum o_ij counts open-slot blockings.
ObjectiveHandle AddOpenSlotCounting(LinearModel& model, const Instance& inst);

// min sum r_ij x_ij.
ObjectiveHandle AddRankObjective(LinearModel& model, const Instance& inst);
// min number of unmatched applicants (among those with applications).
ObjectiveHandle AddUnmatchedObjective(LinearModel& model, const Instance& inst);

// Match variables set from `m`, every other variable 0.
std::vector<int64_t> CharacteristicVector(const LinearModel& model,
                                          const Matching& m);
// Match variables set from `m`, and every auxiliary variable at the smallest
// value its rows allow.
std::vector<int64_t> MinimalCompletion(const LinearModel& model,
                                       const Matching& m);
// Reads the matching encoded by the match variables of an assignment.
Matching MatchingFromAssignment(const LinearModel& model,
                                std::span<const int64_t> values);

}  // namespace quotamatch

#endif  // QUOTAMATCH_IPMODEL_BUILDERS_H_
