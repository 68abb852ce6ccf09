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

// Transportation lower bound for objectives over match variables: keeps only
// the applicant rows, the company capacity rows and rows fixing the total
// number of matches, and solves that relaxation exactly as a min-cost flow.

#ifndef QUOTAMATCH_SOLVER_FLOW_BOUND_H_
#define QUOTAMATCH_SOLVER_FLOW_BOUND_H_

#include <cstdint>
#include <vector>

#include "quotamatch/ipmodel/linear_model.h"

namespace quotamatch::internal {

class FlowBound {
 public:
  static constexpr int64_t kInfeasible = INT64_MAX / 4;

  // When some objective term sits outside the applicant rows, the relaxation
  // still runs as a feasibility check and reports kNoBound when feasible.
  // `objective` may be null for pure feasibility.
  static constexpr int64_t kNoBound = -INT64_MAX / 4;
  FlowBound(const LinearModel& model, const Objective* objective);

  bool active() const { return active_; }

  // Lower bound on the objective given the current bounds, or kInfeasible
  // when the relaxation has no solution.
  int64_t Compute(const std::vector<int64_t>& lo,
                  const std::vector<int64_t>& hi);

 private:
  struct Arc {
    int to;
    int cap;
    int64_t cost;
  };

  void AddArc(int from, int to, int cap, int64_t cost);
  // Shortest augmenting path from source to sink; false when none.
  bool ShortestPath();

  bool active_ = false;
  bool costs_ = false;
  int64_t constant_ = 0;
  int num_groups_ = 0;
  int num_companies_ = 0;
  std::vector<std::vector<int>> group_vars_;
  std::vector<bool> group_exact_;
  std::vector<int> var_company_;  // capacity row of the variable, or -1
  std::vector<int64_t> company_cap_;
  std::vector<int64_t> company_lower_;
  std::vector<int64_t> cost_;
  int64_t min_total_ = 0;
  int64_t max_total_ = INT64_MAX / 4;

  // Residual graph, rebuilt on every call.
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int64_t> dist_;
  std::vector<int> parent_arc_;
  std::vector<bool> in_queue_;
  std::vector<int> queue_;
};

}  // namespace quotamatch::internal

#endif  // QUOTAMATCH_SOLVER_FLOW_BOUND_H_
