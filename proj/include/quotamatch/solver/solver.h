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

// Exact depth-first branch and bound for LinearModel, with bound propagation
// on every row and integer arithmetic throughout.

#ifndef QUOTAMATCH_SOLVER_SOLVER_H_
#define QUOTAMATCH_SOLVER_SOLVER_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "quotamatch/ipmodel/linear_model.h"

namespace quotamatch {

enum class BranchRule {
  kFirstUnfixed,     // model variable order
  kMostConstrained,  // applicant with the fewest open match variables first
};

struct SolverConfig {
  int64_t node_limit = 50'000'000;
  double time_limit_seconds = 600.0;
  // Forces kFirstUnfixed; the search is then a pure function of the model.
  bool deterministic = true;
  BranchRule branch_rule = BranchRule::kFirstUnfixed;
};

enum class SolveStatus { kOptimal, kInfeasible, kLimitReached };

std::string_view SolveStatusName(SolveStatus status);

struct SolveStats {
  int64_t nodes = 0;
  int64_t propagations = 0;

  friend bool operator==(const SolveStats&, const SolveStats&) = default;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kInfeasible;
  // One value per model variable. Set when Optimal, and when LimitReached
  // with an incumbent; empty otherwise.
  std::vector<int64_t> assignment;
  // Every stacked objective evaluated at `assignment`.
  std::vector<int64_t> objective_values;
  SolveStats stats;

  bool has_assignment() const { return !assignment.empty() || status == SolveStatus::kOptimal; }

  friend bool operator==(const SolveOutcome&, const SolveOutcome&) = default;
};

// Minimises the first stacked objective (pure feasibility when the stack is
// empty). Among optima the search returns the first one met when variables
// are fixed in model order, match-like binaries trying 1 before 0 and
// auxiliary columns trying their smallest value first.
SolveOutcome Solve(const LinearModel& model, const SolverConfig& config = {});

// Solves the objectives in stack order. After each stage the optimum is
// pinned with an equality row tagged kLexFix before the next stage runs.
SolveOutcome SolveLexicographic(const LinearModel& model,
                                const SolverConfig& config = {});

}  // namespace quotamatch

#endif  // QUOTAMATCH_SOLVER_SOLVER_H_
