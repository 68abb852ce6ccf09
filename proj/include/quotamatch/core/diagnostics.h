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

#ifndef QUOTAMATCH_CORE_DIAGNOSTICS_H_
#define QUOTAMATCH_CORE_DIAGNOSTICS_H_

#include <cstdint>
#include <vector>

#include "quotamatch/core/instance.h"
#include "quotamatch/core/matching.h"

namespace quotamatch {

// Summary statistics of a matching, always recomputed from the instance and
// the assigned pairs.
struct Diagnostics {
  int matched = 0;
  int unmatched = 0;
  int64_t total_rank = 0;
  std::vector<int> fill;                       // per company
  std::vector<std::vector<int>> type_profile;  // [company][type]
  int within_type_envies = 0;
  int cross_type_envies = 0;
  Score within_type_intensity = 0;  // doubled scale
  Score cross_type_intensity = 0;   // doubled scale
  int blocking_pairs = 0;
  int open_slot_blockings = 0;
  bool complete = false;

  friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

Diagnostics ComputeDiagnostics(const Instance& inst, const Matching& m);

}  // namespace quotamatch

#endif  // QUOTAMATCH_CORE_DIAGNOSTICS_H_
