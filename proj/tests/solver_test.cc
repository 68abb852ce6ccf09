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

#include "quotamatch/solver/solver.h"

#include <optional>
#include <random>
#include <vector>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "quotamatch/core/checks.h"
#include "quotamatch/ipmodel/builders.h"
#include "reference.h"

namespace quotamatch {
namespace {

using ::quotamatch::testing::RandomMarket;
using ::quotamatch::testing::RandomMarketOptions;
using ::quotamatch::testing::TieExample;

// Lexicographic optimum by enumerating every assignment within the bounds.
struct BruteResult {
  std::optional<std::vector<int64_t>> values;  // objective vector
  std::vector<std::vector<int64_t>> optima;    // optimal assignments
};

BruteResult BruteForce(const LinearModel& model) {
  BruteResult out;
  std::vector<int64_t> x(model.num_vars(), 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == model.num_vars()) {
      const Evaluation ev = Evaluate(model, x);
      if (!ev.feasible) return;
      if (!out.values || ev.objective_values < *out.values) {
        out.values = ev.objective_values;
        out.optima.clear();
      }
      if (ev.objective_values == *out.values) out.optima.push_back(x);
      return;
    }
    for (int64_t value = 0; value <= model.var(v).upper; ++value) {
      x[v] = value;
      self(self, v + 1);
    }
    x[v] = 0;
  };
  rec(rec, 0);
  return out;
}

LinearModel RandomModel(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv(1, 9), nr(0, 6), coef(-3, 3),
      pick(0, 3), rhs(-2, 4), nobj(0, 3);
  LinearModel model(3, 3);
  const int n = nv(rng);
  for (int v = 0; v < n; ++v) {
    if (pick(rng) == 0) {
      model.AddVariable({VarKind::kDeficiency, v % 3, v / 3, -1,
                         VarDomain::kNonNegInteger, 2});
    } else {
      model.AddVariable({VarKind::kMatch, v % 3, v / 3});
    }
  }
  // One "at most one" row over the first three columns, like an applicant row.
  std::vector<Term> group;
  for (int v = 0; v < std::min(n, 3); ++v) {
    if (model.var(v).upper == 1) group.push_back({1, v});
  }
  if (!group.empty()) {
    model.AddConstraint({group, pick(rng) == 0 ? Sense::kEqual : Sense::kLessEqual,
                         1, RowTag::kEq1});
  }
  const int rows = nr(rng);
  for (int r = 0; r < rows; ++r) {
    LinearConstraint row;
    for (int v = 0; v < n; ++v) {
      if (pick(rng) == 0) continue;
      const int c = coef(rng);
      if (c != 0) row.terms.push_back({c, v});
    }
    const int s = pick(rng);
    row.sense = s == 0 ? Sense::kEqual
                : s == 1 ? Sense::kGreaterEqual
                         : Sense::kLessEqual;
    row.rhs = rhs(rng);
    row.tag = RowTag::kFix;
    model.AddConstraint(row);
  }
  const int objectives = nobj(rng);
  for (int o = 0; o < objectives; ++o) {
    Objective obj;
    obj.label = "o";
    obj.constant = coef(rng);
    for (int v = 0; v < n; ++v) {
      const int c = coef(rng);
      if (c != 0) obj.terms.push_back({c, v});
    }
    model.AddObjective(obj);
  }
  return model;
}

void ExpectAgreesWithBruteForce(const LinearModel& model,
                                const SolverConfig& config) {
  const BruteResult brute = BruteForce(model);
  const SolveOutcome got = SolveLexicographic(model, config);
  if (!brute.values) {
    ASSERT_EQ(got.status, SolveStatus::kInfeasible) << model.Dump();
    return;
  }
  ASSERT_EQ(got.status, SolveStatus::kOptimal) << model.Dump();
  ASSERT_EQ(got.objective_values, *brute.values) << model.Dump();
  ASSERT_TRUE(Evaluate(model, got.assignment).feasible);
  ASSERT_NE(std::find(brute.optima.begin(), brute.optima.end(), got.assignment),
            brute.optima.end());
}

TEST(SolveTest, RankAloneDropsAnApplicant) {
  const Instance inst = TieExample();
  LinearModel model = BuildBase(inst, /*ties=*/true);
  AddRankObjective(model, inst);
  const SolveOutcome out = Solve(model);
  ASSERT_EQ(out.status, SolveStatus::kOptimal);
  EXPECT_EQ(out.objective_values, std::vector<int64_t>{1});
  EXPECT_EQ(MatchingFromAssignment(model, out.assignment),
            Matching(2, {{1, 0}}));
}

TEST(SolveTest, UnmatchedFirstKeepsBoth) {
  const Instance inst = TieExample();
  LinearModel model = BuildBase(inst, /*ties=*/true);
  AddUnmatchedObjective(model, inst);
  AddRankObjective(model, inst);
  const SolveOutcome out = SolveLexicographic(model);
  ASSERT_EQ(out.status, SolveStatus::kOptimal);
  EXPECT_EQ(out.objective_values, (std::vector<int64_t>{0, 3}));
  EXPECT_EQ(MatchingFromAssignment(model, out.assignment),
            Matching(2, {{0, 0}, {1, 1}}));
}

TEST(SolveTest, EmptyModel) {
  LinearModel model;
  model.AddObjective({{}, 0, "zero"});
  const SolveOutcome out = Solve(model);
  EXPECT_EQ(out.status, SolveStatus::kOptimal);
  EXPECT_TRUE(out.assignment.empty());
  EXPECT_EQ(out.objective_values, std::vector<int64_t>{0});
}

TEST(SolveTest, LowerQuotaBeyondApplicants) {
  const Instance inst = TieExample(/*upper_c1=*/3, 1, /*lower_c1=*/3);
  LinearModel model = BuildFeasibility(inst);
  AddLowerQuotas(model, inst);
  EXPECT_EQ(Solve(model).status, SolveStatus::kInfeasible);
}

TEST(SolveTest, FeasibilityWithoutObjective) {
  const Instance inst = TieExample();
  const LinearModel model = BuildBase(inst, true);
  const SolveOutcome out = Solve(model);
  ASSERT_EQ(out.status, SolveStatus::kOptimal);
  EXPECT_TRUE(out.objective_values.empty());
  EXPECT_TRUE(Evaluate(model, out.assignment).feasible);
}

TEST(SolveTest, NodeLimit) {
  std::mt19937 rng(5);
  RandomMarketOptions opts;
  opts.max_applicants = 6;
  opts.full_lists = true;
  const Instance inst = RandomMarket(rng, opts);
  LinearModel model = BuildFeasibility(inst);
  AddRankObjective(model, inst);
  SolverConfig config;
  config.node_limit = 0;
  const SolveOutcome out = Solve(model, config);
  EXPECT_EQ(out.status, SolveStatus::kLimitReached);
}

TEST(SolveLexicographicTest, ZeroObjectiveFirstChangesNothing) {
  const Instance inst = testing::NonMonotoneExample();
  LinearModel plain = BuildBase(inst, true);
  AddRankObjective(plain, inst);
  LinearModel stacked = BuildBase(inst, true);
  stacked.AddObjective({{}, 0, "zero"});
  AddRankObjective(stacked, inst);
  const SolveOutcome a = SolveLexicographic(plain);
  const SolveOutcome b = SolveLexicographic(stacked);
  ASSERT_EQ(a.status, SolveStatus::kOptimal);
  EXPECT_EQ(a.assignment, b.assignment);
  EXPECT_EQ(b.objective_values, (std::vector<int64_t>{0, a.objective_values[0]}));
}

TEST(SolveLexicographicTest, RandomModelsMatchBruteForce) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const LinearModel model = RandomModel(rng);
    ExpectAgreesWithBruteForce(model, {});
    if (::testing::Test::HasFatalFailure()) return;
  }
}

TEST(SolveLexicographicTest, MostConstrainedFindsSameValues) {
  std::mt19937 rng(12);
  SolverConfig config;
  config.deterministic = false;
  config.branch_rule = BranchRule::kMostConstrained;
  for (int trial = 0; trial < 1000; ++trial) {
    const LinearModel model = RandomModel(rng);
    const BruteResult brute = BruteForce(model);
    const SolveOutcome got = SolveLexicographic(model, config);
    if (!brute.values) {
      ASSERT_EQ(got.status, SolveStatus::kInfeasible);
    } else {
      ASSERT_EQ(got.objective_values, *brute.values) << model.Dump();
    }
  }
}

TEST(SolveLexicographicTest, MarketModelsMatchBruteForce) {
  std::mt19937 rng(13);
  RandomMarketOptions opts;
  opts.max_applicants = 3;
  opts.num_types = 2;
  opts.lower_quotas = true;
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = RandomMarket(rng, opts);
    LinearModel model = BuildFeasibility(inst);
    switch (trial % 4) {
      case 0:
        AddMinDeficiency(model, inst);
        break;
      case 1:
        AddStability(model, inst, true);
        AddAlmostStable(model, inst);
        break;
      case 2:
        RequireComplete(model, inst);
        AddWithinTypeEnvyFree(model, inst);
        AddCrossTypeEnvyTracking(model, inst, EnvyWeight::kIntensity);
        break;
      case 3:
        AddEnvyFree(model, inst);
        AddOpenSlotCounting(model, inst);
        break;
    }
    AddLowerQuotas(model, inst);
    AddUnmatchedObjective(model, inst);
    AddRankObjective(model, inst);
    if (model.num_vars() > 16) continue;
    ExpectAgreesWithBruteForce(model, {});
    if (::testing::Test::HasFatalFailure()) return;
  }
}

TEST(SolveLexicographicTest, LexFixHoldsWithEquality) {
  std::mt19937 rng(14);
  RandomMarketOptions opts;
  opts.full_lists = true;
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = RandomMarket(rng, opts);
    LinearModel model = BuildFeasibility(inst);
    AddEnvyFree(model, inst);
    AddOpenSlotCounting(model, inst);
    AddUnmatchedObjective(model, inst);
    AddRankObjective(model, inst);
    const SolveOutcome all = SolveLexicographic(model);
    ASSERT_EQ(all.status, SolveStatus::kOptimal);
    // The first stage alone reaches the same first value.
    const SolveOutcome first = Solve(model);
    EXPECT_EQ(first.objective_values[0], all.objective_values[0]);
    EXPECT_LE(all.objective_values[1], first.objective_values[1]);
  }
}

TEST(SolveTest, DeterministicRepeats) {
  std::mt19937 rng(15);
  RandomMarketOptions opts;
  opts.max_applicants = 6;
  opts.full_lists = true;
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = RandomMarket(rng, opts);
    LinearModel model = BuildBase(inst, true);
    AddUnmatchedObjective(model, inst);
    AddRankObjective(model, inst);
    const SolveOutcome a = SolveLexicographic(model);
    const SolveOutcome b = SolveLexicographic(model);
    EXPECT_EQ(a, b);
  }
}

}  // namespace
}  // namespace quotamatch
