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

#include "quotamatch/core/diagnostics.h"

#include "quotamatch/core/checks.h"

namespace quotamatch {

Diagnostics ComputeDiagnostics(const Instance& inst, const Matching& m) {
  Diagnostics d;
  d.matched = m.size();
  d.unmatched = inst.num_applicants() - d.matched;
  d.total_rank = TotalRank(inst, m);
  d.fill = CompanyFill(inst, m);
  d.type_profile = TypeProfile(inst, m);
  for (const Envy& e : JustifiedEnvies(inst, m)) {
    if (inst.type_of(e.envier) == inst.type_of(e.envied)) {
      ++d.within_type_envies;
      d.within_type_intensity += e.intensity;
    } else {
      ++d.cross_type_envies;
      d.cross_type_intensity += e.intensity;
    }
  }
  d.blocking_pairs = static_cast<int>(BlockingPairs(inst, m).size());
  d.open_slot_blockings = static_cast<int>(OpenSlotBlockings(inst, m).size());
  d.complete = IsComplete(inst, m);
  return d;
}

}  // namespace quotamatch
