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

#include <random>
#include <set>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "quotamatch/core/checks.h"
#include "quotamatch/core/diagnostics.h"
#include "reference.h"

namespace quotamatch {
namespace {

using ::quotamatch::testing::NonMonotoneExample;
using ::quotamatch::testing::TieExample;

std::vector<ViolationKind> Kinds(const std::vector<Violation>& v) {
  std::vector<ViolationKind> out;
  for (const auto& x : v) out.push_back(x.kind);
  return out;
}

TEST(ValidateInstanceTest, TieExampleIsValid) {
  EXPECT_TRUE(ValidateInstance(TieExample()).empty());
  EXPECT_TRUE(ValidateInstance(NonMonotoneExample()).empty());
}

TEST(ValidateInstanceTest, LowerAboveUpper) {
  Instance inst = TieExample(/*upper_c1=*/2, 1, /*lower_c1=*/3);
  auto v = ValidateInstance(inst);
  ASSERT_EQ(v.size(), 1);
  EXPECT_EQ(v[0].kind, ViolationKind::kQuotaOrder);
  EXPECT_EQ(v[0].subject, "c1");
}

TEST(ValidateInstanceTest, DanglingPreference) {
  Instance inst({"all"}, {{"a1", 0, {0, 7}}}, {{"c1", 0, 1, {}, {}}},
                {{0, 0, 0, 4}});
  EXPECT_EQ(Kinds(ValidateInstance(inst)),
            std::vector{ViolationKind::kDanglingPreference});
}

TEST(ValidateInstanceTest, ApplicationRules) {
  Instance inst({"all"}, {{"a1", 0, {0, 1}}, {"a2", 0, {}}},
                {{"c1", 0, 1, {}, {}}, {"c2", 0, 1, {}, {}}},
                {{0, 0, 0, 4}, {0, 0, 0, 6}, {1, 1, 0, -2}});
  const auto kind_list = Kinds(ValidateInstance(inst));
  std::set<ViolationKind> kinds(kind_list.begin(), kind_list.end());
  EXPECT_TRUE(kinds.count(ViolationKind::kMissingApplication));    // a1/c2
  EXPECT_TRUE(kinds.count(ViolationKind::kDuplicateApplication));  // a1/c1
  EXPECT_TRUE(kinds.count(ViolationKind::kUnlistedApplication));   // a2/c2
  EXPECT_TRUE(kinds.count(ViolationKind::kNegativeScore));
  EXPECT_TRUE(kinds.count(ViolationKind::kEmptyPreferences));
}

TEST(ValidateInstanceTest, EmptyListIsOnlyAWarning) {
  Instance inst({"all"}, {{"a1", 0, {}}}, {{"c1", 0, 1, {}, {}}}, {});
  auto v = ValidateInstance(inst);
  ASSERT_EQ(v.size(), 1);
  EXPECT_EQ(v[0].severity, Severity::kWarning);
  EXPECT_FALSE(HasErrors(v));
  EXPECT_TRUE(IsComplete(inst, Matching(1)));
}

TEST(ValidateInstanceTest, TypeAndGlobalQuotas) {
  Instance inst({"x", "y"}, {{"a1", 1, {0}}}, {{"c1", 0, 2, {3, 0}, {1, 5}}},
                {{0, 0, 0, 4}}, {2, 0}, {1, 9});
  std::set<ViolationKind> kinds;
  for (auto k : Kinds(ValidateInstance(inst))) kinds.insert(k);
  EXPECT_TRUE(kinds.count(ViolationKind::kTypeQuotaOrder));
  EXPECT_TRUE(kinds.count(ViolationKind::kTypeQuotaAboveUpper));
  EXPECT_TRUE(kinds.count(ViolationKind::kGlobalQuotaOrder));
}

TEST(CheckFeasibleTest, PaperExamples) {
  EXPECT_TRUE(CheckFeasible(TieExample(), Matching(2, {{0, 0}, {1, 1}}),
                            QuotaMode::kUpperOnly)
                  .empty());
  EXPECT_TRUE(CheckFeasible(NonMonotoneExample(),
                            Matching(5, {{0, 1}, {1, 2}, {3, 0}}),
                            QuotaMode::kUpperOnly)
                  .empty());
}

TEST(CheckFeasibleTest, LowerQuotaIsCumulative) {
  Instance inst = TieExample(1, 1, /*lower_c1=*/1);
  Matching empty(2);
  EXPECT_TRUE(CheckFeasible(inst, empty, QuotaMode::kUpperOnly).empty());
  auto v = CheckFeasible(inst, empty, QuotaMode::kWithLower);
  ASSERT_EQ(v.size(), 1);
  EXPECT_EQ(v[0].kind, ViolationKind::kLowerQuota);
  EXPECT_EQ(v[0].subject, "c1");
}

TEST(CheckFeasibleTest, UnknownAssignmentAndUpper) {
  Instance inst = TieExample();
  auto v = CheckFeasible(inst, Matching(2, {{0, 1}}), QuotaMode::kUpperOnly);
  EXPECT_EQ(Kinds(v), std::vector{ViolationKind::kUnknownAssignment});
  v = CheckFeasible(inst, Matching(2, {{0, 0}, {1, 0}}), QuotaMode::kUpperOnly);
  EXPECT_EQ(Kinds(v), std::vector{ViolationKind::kUpperQuota});
}

TEST(CheckFeasibleTest, TypeAndGlobalModes) {
  Instance inst({"x", "y"}, {{"a1", 1, {0}}, {"a2", 1, {0}}},
                {{"c1", 0, 2, {0, 0}, {2, 1}}}, {{0, 0, 0, 4}, {1, 0, 0, 4}},
                {1, 0}, {kUnbounded, kUnbounded});
  Matching both(2, {{0, 0}, {1, 0}});
  EXPECT_TRUE(CheckFeasible(inst, both, QuotaMode::kWithLower).empty());
  EXPECT_EQ(Kinds(CheckFeasible(inst, both, QuotaMode::kWithTypes)),
            std::vector{ViolationKind::kTypeUpperQuota});
  EXPECT_EQ(Kinds(CheckFeasible(inst, both, QuotaMode::kWithGlobalTypes)),
            (std::vector{ViolationKind::kTypeUpperQuota,
                         ViolationKind::kGlobalTypeLower}));
}

TEST(IsCompleteTest, Examples) {
  Instance inst = TieExample();
  EXPECT_TRUE(IsComplete(inst, Matching(2, {{0, 0}, {1, 1}})));
  EXPECT_FALSE(IsComplete(inst, Matching(2, {{1, 0}})));
  EXPECT_TRUE(IsComplete(Instance(), Matching(0)));
}

TEST(BlockingPairsTest, EqualScoreDoesNotBlock) {
  EXPECT_TRUE(
      BlockingPairs(TieExample(), Matching(2, {{0, 0}, {1, 1}}), true).empty());
  // The ties flag is inert.
  EXPECT_TRUE(
      BlockingPairs(TieExample(), Matching(2, {{0, 0}, {1, 1}}), false).empty());
}

TEST(BlockingPairsTest, UniqueStableMatchingOfNonMonotoneExample) {
  EXPECT_TRUE(BlockingPairs(NonMonotoneExample(),
                            Matching(5, {{0, 1}, {1, 2}, {3, 0}}))
                  .empty());
}

TEST(BlockingPairsTest, EmptyCompany) {
  // Frozen from the naive predicate in reference.h.
  Instance inst = TieExample();
  Matching m(2, {{1, 1}});
  auto naive = testing::NaiveBlockingPairs(inst, m);
  std::vector<Pair> expected = {{0, 0}, {1, 0}};
  EXPECT_EQ(std::vector<Pair>(naive.begin(), naive.end()), expected);
  EXPECT_EQ(BlockingPairs(inst, m), expected);
}

TEST(OpenSlotBlockingsTest, Examples) {
  EXPECT_TRUE(
      OpenSlotBlockings(TieExample(), Matching(2, {{0, 0}, {1, 1}})).empty());
  Instance wide = TieExample(/*upper_c1=*/2);
  Matching m(2, {{0, 0}, {1, 1}});
  EXPECT_EQ(OpenSlotBlockings(wide, m), (std::vector<Pair>{{1, 0}}));
  auto naive = testing::NaiveBlockingPairs(wide, m);
  EXPECT_EQ(naive, (std::set<Pair>{{1, 0}}));
  EXPECT_TRUE(OpenSlotBlockings(NonMonotoneExample(),
                                Matching(5, {{0, 1}, {1, 2}, {3, 0}}))
                  .empty());
}

TEST(EnvyTest, RawScoresOfShiftedMatching) {
  Instance inst = NonMonotoneExample();
  Matching shifted(5, {{0, 0}, {3, 2}, {4, 1}});
  EXPECT_TRUE(WithinTypeEnvies(inst, shifted).empty());
  auto cross = CrossTypeEnvies(inst, shifted);
  ASSERT_EQ(cross.size(), 1);
  EXPECT_EQ(cross[0], (Envy{3, 0, 0, 2}));
  auto naive = testing::NaiveEnvies(inst, shifted, /*same_type=*/false);
  ASSERT_EQ(naive.size(), 1);
  EXPECT_EQ(*naive.begin(), (testing::NaiveEnvy{3, 0, 0, 2}));
}

TEST(EnvyTest, StableMatchingIsEnvyFree) {
  Instance inst = NonMonotoneExample();
  Matching stable(5, {{0, 1}, {1, 2}, {3, 0}});
  EXPECT_TRUE(JustifiedEnvies(inst, stable).empty());
}

TEST(TotalRankTest, Examples) {
  EXPECT_EQ(TotalRank(TieExample(), Matching(2, {{0, 0}, {1, 1}})), 3);
  EXPECT_EQ(TotalRank(NonMonotoneExample(), Matching(5, {{0, 1}, {1, 2}, {3, 0}})),
            6);
  EXPECT_EQ(TotalRank(TieExample(), Matching(2)), 0);
}

TEST(DiagnosticsTest, CountsAgreeWithCheckers) {
  Instance inst = NonMonotoneExample();
  Matching shifted(5, {{0, 0}, {3, 2}, {4, 1}});
  Diagnostics d = ComputeDiagnostics(inst, shifted);
  EXPECT_EQ(d.matched, 3);
  EXPECT_EQ(d.unmatched, 2);
  EXPECT_EQ(d.total_rank, 1 + 3 + 2);
  EXPECT_EQ(d.cross_type_envies, 1);
  EXPECT_EQ(d.cross_type_intensity, 2);
  EXPECT_EQ(d.within_type_envies, 0);
  EXPECT_EQ(d.fill, (std::vector<int>{1, 1, 1}));
  EXPECT_FALSE(d.complete);
}

// Checker properties over every assignment of many small random markets.
TEST(CheckerPropertyTest, AgreesWithNaiveDefinitions) {
  std::mt19937 rng(20260101);
  testing::RandomMarketOptions opts;
  opts.num_types = 2;
  for (int trial = 0; trial < 150; ++trial) {
    Instance inst = testing::RandomMarket(rng, opts);
    ASSERT_FALSE(HasErrors(ValidateInstance(inst)));
    for (const Matching& m : testing::AllAssignments(inst)) {
      if (!CheckFeasible(inst, m, QuotaMode::kUpperOnly).empty()) continue;
      auto blocking = BlockingPairs(inst, m);
      auto naive = testing::NaiveBlockingPairs(inst, m);
      ASSERT_EQ(std::set<Pair>(blocking.begin(), blocking.end()), naive);

      auto open = OpenSlotBlockings(inst, m);
      for (const Pair& p : open) {
        ASSERT_TRUE(std::binary_search(blocking.begin(), blocking.end(), p));
      }

      auto within = WithinTypeEnvies(inst, m);
      auto cross = CrossTypeEnvies(inst, m);
      auto all = JustifiedEnvies(inst, m);
      ASSERT_EQ(within.size() + cross.size(), all.size());
      std::set<Envy> merged(within.begin(), within.end());
      merged.insert(cross.begin(), cross.end());
      ASSERT_EQ(merged, std::set<Envy>(all.begin(), all.end()));
      ASSERT_EQ(within.size(), testing::NaiveEnvies(inst, m, true).size());
      ASSERT_EQ(cross.size(), testing::NaiveEnvies(inst, m, false).size());

      if (all.empty()) ASSERT_EQ(blocking, open);

      // Adding any free assignment never lowers the total rank.
      for (int i = 0; i < inst.num_applicants(); ++i) {
        if (m.is_matched(i)) continue;
        for (int j : inst.applicant(i).preferences) {
          Matching bigger = m;
          bigger.Assign(i, j);
          ASSERT_GE(TotalRank(inst, bigger), TotalRank(inst, m));
        }
      }
    }
  }
}

}  // namespace
}  // namespace quotamatch
