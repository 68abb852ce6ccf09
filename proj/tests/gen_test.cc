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

#include "quotamatch/gen/generator.h"

#include <set>

#include "gtest/gtest.h"
#include "quotamatch/core/checks.h"

namespace quotamatch {
namespace {

Instance MustGenerate(const GenParams& p) {
  absl::StatusOr<Instance> inst = Generate(p);
  EXPECT_TRUE(inst.ok()) << inst.status();
  return inst.ok() ? *inst : Instance();
}

TEST(GenerateTest, SameSeedSameInstance) {
  GenParams p;
  p.num_applicants = 12;
  p.num_companies = 4;
  p.tie_density = 0.5;
  p.half_point_prob = 0.3;
  p.popularity = 1.5;
  p.full_lists = false;
  p.seed = 99;
  EXPECT_EQ(MustGenerate(p), MustGenerate(p));
  GenParams q = p;
  q.seed = 100;
  EXPECT_FALSE(MustGenerate(p) == MustGenerate(q));
}

TEST(GenerateTest, Shape2016) {
  const Instance inst =
      MustGenerate(ApplyShape(GenParams{}, QuotaProfile::kApplicationShape2016));
  EXPECT_EQ(inst.num_applicants(), 25);
  EXPECT_EQ(inst.type_population(1), 5);
  EXPECT_EQ(inst.type_name(1), "foreign");
  ASSERT_EQ(inst.num_companies(), 5);
  for (int j = 0; j < 5; ++j) {
    EXPECT_EQ(inst.company(j).lower, 4);
    EXPECT_EQ(inst.company(j).upper, 6);
    EXPECT_EQ(inst.type_upper(j, 1), 2);
    EXPECT_EQ(inst.type_upper(j, 0), 6);
  }
  EXPECT_EQ(inst.num_applications(), 25 * 5);
}

TEST(GenerateTest, Shape2017) {
  const Instance inst =
      MustGenerate(ApplyShape(GenParams{}, QuotaProfile::kApplicationShape2017));
  EXPECT_EQ(inst.num_applicants(), 40);
  EXPECT_EQ(inst.type_population(1), 13);
  ASSERT_EQ(inst.num_companies(), 8);
  for (int j = 0; j < 8; ++j) {
    EXPECT_EQ(inst.company(j).lower, 3);
    EXPECT_EQ(inst.company(j).upper, 6);
    EXPECT_EQ(inst.type_lower(j, 1), 1);
  }
}

TEST(GenerateTest, WorkshopShape) {
  const Instance inst =
      MustGenerate(ApplyShape(GenParams{}, QuotaProfile::kWorkshopShape));
  ASSERT_EQ(inst.num_companies(), 3);
  EXPECT_EQ(inst.company(0).upper, 16);
  EXPECT_EQ(inst.company(1).upper, 22);
  EXPECT_EQ(inst.company(2).upper, 22);
  EXPECT_EQ(inst.type_lower(0, 0), 8);
  EXPECT_EQ(inst.type_population(0), 29);
  EXPECT_EQ(inst.type_population(1), 15);
  EXPECT_EQ(inst.type_population(2), 19);
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(inst.global_lower(k), inst.global_upper(k));
  }
  EXPECT_EQ(inst.global_lower(0), 25);
  EXPECT_EQ(inst.global_lower(1), 12);
  EXPECT_EQ(inst.global_lower(2), 10);
}

TEST(GenerateTest, WorkshopPreselectedSeats) {
  GenParams p = ApplyShape(GenParams{}, QuotaProfile::kWorkshopShape);
  p.preselected = 13;
  const Instance inst = MustGenerate(p);
  EXPECT_EQ(inst.company(0).upper, 13);
  EXPECT_EQ(inst.company(1).upper, 17);
  EXPECT_EQ(inst.company(2).upper, 17);
  EXPECT_EQ(inst.total_capacity(), 47);
  EXPECT_EQ(inst.global_upper(0) + inst.global_upper(1) + inst.global_upper(2),
            47);
}

TEST(GenerateTest, ScoresStayInRange) {
  for (double density : {0.0, 0.3, 0.7, 1.0}) {
    GenParams p = ApplyShape(GenParams{}, QuotaProfile::kApplicationShape2017);
    p.tie_density = density;
    p.half_point_prob = 0.5;
    p.seed = 7;
    const Instance inst = MustGenerate(p);
    for (const Application& a : inst.applications()) {
      EXPECT_GE(a.score, 2);
      EXPECT_LE(a.score, 20);
    }
  }
}

TEST(GenerateTest, ZeroTieDensityGivesDistinctScores) {
  GenParams p;
  p.num_applicants = 19;
  p.num_companies = 3;
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    p.seed = seed;
    const Instance inst = MustGenerate(p);
    for (int j = 0; j < inst.num_companies(); ++j) {
      std::set<Score> seen;
      for (int a : inst.applications_to(j)) {
        EXPECT_TRUE(seen.insert(inst.application(a).score).second);
      }
    }
  }
}

TEST(GenerateTest, FullDensityMeansOneLevel) {
  GenParams p;
  p.num_applicants = 8;
  p.tie_density = 1.0;
  const Instance inst = MustGenerate(p);
  for (const Application& a : inst.applications()) EXPECT_EQ(a.score, 20);
}

TEST(GenerateTest, PartialListsAndValidity) {
  GenParams p;
  p.num_applicants = 30;
  p.num_companies = 6;
  p.full_lists = false;
  p.min_list_length = 2;
  p.type_names = {"x", "y", "z"};
  p.type_counts = {10, 10, 10};
  p.type_upper = {1, 2, 3};
  p.global_upper = {5, 5, 5};
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    p.seed = seed;
    const Instance inst = MustGenerate(p);
    EXPECT_FALSE(HasErrors(ValidateInstance(inst)));
    for (const Applicant& a : inst.applicants()) {
      EXPECT_GE(a.preferences.size(), 2u);
    }
  }
}

TEST(GenerateTest, RejectsBadCounts) {
  GenParams p;
  p.type_names = {"x", "y"};
  p.type_counts = {1, 1};
  p.num_applicants = 5;
  EXPECT_FALSE(Generate(p).ok());
  p.type_counts = {};
  p.type_upper = {1};
  EXPECT_FALSE(Generate(p).ok());
}

TEST(ParseQuotaProfileTest, Names) {
  EXPECT_EQ(ParseQuotaProfile("Workshop"), QuotaProfile::kWorkshopShape);
  EXPECT_EQ(ParseQuotaProfile("2016"), QuotaProfile::kApplicationShape2016);
  EXPECT_FALSE(ParseQuotaProfile("nope").has_value());
}

}  // namespace
}  // namespace quotamatch
