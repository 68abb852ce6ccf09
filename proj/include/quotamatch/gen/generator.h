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

// Seeded random markets, from tiny uniform ones up to the shapes of the two
// internship applications and the workshop selection.

#ifndef QUOTAMATCH_GEN_GENERATOR_H_
#define QUOTAMATCH_GEN_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "quotamatch/core/instance.h"

namespace quotamatch {

enum class QuotaProfile {
  kUniform,  // every company gets (lower, upper)
  kApplicationShape2016,
  kApplicationShape2017,
  kWorkshopShape,
};

std::string_view QuotaProfileName(QuotaProfile profile);
std::optional<QuotaProfile> ParseQuotaProfile(std::string_view name);

struct GenParams {
  int num_applicants = 6;
  int num_companies = 3;
  // Applicants are assigned to types in blocks, in order. Empty counts put
  // everyone in the first type.
  std::vector<std::string> type_names = {"all"};
  std::vector<int> type_counts;

  // Whole-point score range; scores may additionally carry a half point.
  int min_score = 1;
  int max_score = 10;
  double half_point_prob = 0.0;
  // 0: every company scores its applicants with distinct values (as far as
  // the half-point grid allows). Towards 1: fewer whole-point levels, so ties
  // become common.
  double tie_density = 0.0;

  QuotaProfile profile = QuotaProfile::kUniform;
  int lower = 0;
  int upper = 2;
  // Per-type company quotas applied to every company; empty means none.
  std::vector<int> type_lower;
  std::vector<int> type_upper;
  // Global type quotas; empty means none.
  std::vector<int> global_lower;
  std::vector<int> global_upper;
  // Workshop shape: seats already filled before the allocation. Removed from
  // the company quotas, split in proportion to seats.
  int preselected = 0;

  bool full_lists = true;
  int min_list_length = 1;
  // 0 gives uniformly random preference orders; larger values skew all
  // applicants towards the same popular companies.
  double popularity = 0.0;

  uint64_t seed = 1;
};

// Fills in the counts and quotas of a named shape, keeping score, list and
// seed settings.
GenParams ApplyShape(GenParams params, QuotaProfile profile);

absl::StatusOr<Instance> Generate(const GenParams& params);

}  // namespace quotamatch

#endif  // QUOTAMATCH_GEN_GENERATOR_H_
