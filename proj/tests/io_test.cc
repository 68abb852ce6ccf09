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

#include "quotamatch/io/formats.h"

#include <string>
#include <vector>

#include "fixtures.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "quotamatch/core/checks.h"
#include "quotamatch/gen/generator.h"
#include "small_markets.h"

namespace quotamatch {
namespace {

using ::quotamatch::testing::SmallMarketParams;
using ::quotamatch::testing::TieExample;
using ::testing::HasSubstr;

TEST(HalfPointsTest, ParsesWholeAndHalf) {
  EXPECT_EQ(*ParseHalfPoints("7"), 14);
  EXPECT_EQ(*ParseHalfPoints("7.0"), 14);
  EXPECT_EQ(*ParseHalfPoints("7.5"), 15);
  EXPECT_EQ(*ParseHalfPoints("0.5"), 1);
  EXPECT_EQ(FormatHalfPoints(15), "7.5");
  EXPECT_EQ(FormatHalfPoints(14), "7");
}

TEST(HalfPointsTest, RejectsOtherFractions) {
  for (const char* bad : {"7.25", ".25", "7.", "x", "", "7.05", "1e1"}) {
    EXPECT_FALSE(ParseHalfPoints(bad).ok()) << bad;
  }
}

TEST(InstanceFormatTest, RoundTripsGeneratedInstances) {
  std::vector<GenParams> params;
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    GenParams p = SmallMarketParams(seed, 0.5);
    p.half_point_prob = 0.3;
    p.full_lists = seed % 2 == 0;
    params.push_back(p);
  }
  for (QuotaProfile shape :
       {QuotaProfile::kApplicationShape2016, QuotaProfile::kApplicationShape2017,
        QuotaProfile::kWorkshopShape}) {
    GenParams p;
    p.seed = 9;
    p.half_point_prob = 0.5;
    params.push_back(ApplyShape(p, shape));
  }
  for (const GenParams& p : params) {
    auto inst = Generate(p);
    ASSERT_TRUE(inst.ok());
    const std::string text = EmitInstance(*inst);
    auto back = ParseInstance(text);
    ASSERT_TRUE(back.ok()) << back.status() << "\n" << text;
    EXPECT_EQ(*back, *inst) << text;
    EXPECT_EQ(EmitInstance(*back), text);
  }
}

TEST(InstanceFormatTest, AcceptsCommentsAndBlankLines) {
  const std::string text =
      "# market\n[types]\nall\n\n[applicants]\na1 : c1   # only one\n"
      "[companies]\nc#1 upper=1\nc1 upper=2\n[scores]\na1 c1 4.5\n";
  auto inst = ParseInstance(text);
  ASSERT_TRUE(inst.ok()) << inst.status();
  EXPECT_EQ(inst->num_companies(), 2);
  EXPECT_EQ(inst->company(0).name, "c#1");
  EXPECT_EQ(inst->score(0, 1), 9);
}

TEST(InstanceFormatTest, ErrorsNameTheLine) {
  const std::string text =
      "[types]\nall\n[applicants]\na1 : c1\n[companies]\nc1 upper=1\n"
      "[scores]\na1 c1 .25\n";
  auto inst = ParseInstance(text);
  ASSERT_FALSE(inst.ok());
  EXPECT_THAT(inst.status().message(), HasSubstr("line 8"));

  auto field = ParseInstance("[types]\nall\n[companies]\nc1 upper=many\n");
  ASSERT_FALSE(field.ok());
  EXPECT_THAT(field.status().message(), HasSubstr("line 4"));
  EXPECT_THAT(field.status().message(), HasSubstr("upper"));

  EXPECT_FALSE(ParseInstance("[nonsense]\n").ok());
  EXPECT_FALSE(ParseInstance("a1 : c1\n").ok());
  EXPECT_FALSE(
      ParseInstance("[types]\nall\n[applicants]\na1 : c9\n[companies]\nc1\n")
          .ok());
}

TEST(InstanceFormatTest, GlobalQuotasWithInfinity) {
  const std::string text =
      "[types]\nlocal\nforeign\n[applicants]\na1 foreign : c1\na2 : c1\n"
      "[companies]\nc1 upper=2 type_upper.foreign=1\n[scores]\na1 c1 3\n"
      "a2 c1 2\n[global_quotas]\nforeign 1 inf\n";
  auto inst = ParseInstance(text);
  ASSERT_TRUE(inst.ok()) << inst.status();
  EXPECT_EQ(inst->global_lower(1), 1);
  EXPECT_EQ(inst->global_upper(1), kUnbounded);
  EXPECT_EQ(inst->type_upper(0, 1), 1);
  EXPECT_EQ(inst->type_of(1), 0);
  EXPECT_TRUE(ValidateInstance(*inst).empty());
}

SolveReport TieReport() {
  auto r = SolveConcept(TieExample(), {ConceptName::kMinRankStable});
  EXPECT_TRUE(r.ok());
  return *r;
}

TEST(MatchingFormatTest, TextDocumentRoundTrip) {
  const Instance inst = TieExample();
  const SolveReport r = TieReport();
  auto doc = ParseMatchingDocument(EmitMatchingFile(inst, r));
  ASSERT_TRUE(doc.ok()) << doc.status();
  EXPECT_EQ(doc->header["concept"], "MinRank-Stable");
  EXPECT_EQ(doc->header["status"], "Optimal");
  auto m = ResolveMatching(inst, *doc);
  ASSERT_TRUE(m.ok());
  EXPECT_EQ(*m, r.matching);
  EXPECT_TRUE(DiagnosticDiscrepancies(inst, *m, *doc).empty());
  EXPECT_EQ(doc->diagnostics["profile.c1"], "1 1");
}

TEST(MatchingFormatTest, RecordsRoundTrip) {
  const Instance inst = TieExample();
  const SolveReport r = TieReport();
  auto doc = ParseMatchingRecords(EmitRecords(inst, {&r, 1}));
  ASSERT_TRUE(doc.ok()) << doc.status();
  auto m = ResolveMatching(inst, *doc);
  ASSERT_TRUE(m.ok());
  EXPECT_EQ(*m, r.matching);
  EXPECT_TRUE(DiagnosticDiscrepancies(inst, *m, *doc).empty());
  EXPECT_EQ(doc->header["instance"].size(), 16u);
}

TEST(MatchingFormatTest, EditedDiagnosticIsReported) {
  const Instance inst = TieExample();
  const SolveReport r = TieReport();
  auto doc = ParseMatchingDocument(EmitMatchingFile(inst, r));
  ASSERT_TRUE(doc.ok());
  doc->diagnostics["total_rank"] = "2";
  doc->diagnostics["mystery"] = "1";
  const auto found = DiagnosticDiscrepancies(inst, r.matching, *doc);
  ASSERT_EQ(found.size(), 2u);
  EXPECT_THAT(found[0], HasSubstr("total_rank: file says 2, recomputed 3"));
  EXPECT_THAT(found[1], HasSubstr("mystery"));
}

TEST(MatchingFormatTest, FabricatedPairsAreUnknownAssignments) {
  const Instance inst = TieExample();
  for (const char* text : {"[matching]\na1 c7\n", "[matching]\nzed c1\n",
                           "[matching]\na1 c1\na1 c2\n"}) {
    auto doc = ParseMatchingDocument(text);
    ASSERT_TRUE(doc.ok());
    auto m = ResolveMatching(inst, *doc);
    ASSERT_FALSE(m.ok()) << text;
    EXPECT_THAT(m.status().message(), HasSubstr("UnknownAssignment"));
  }
  // Known names but no application: caught by the feasibility check.
  auto doc = ParseMatchingDocument("[matching]\na1 c2\n");
  ASSERT_TRUE(doc.ok());
  auto m = ResolveMatching(inst, *doc);
  if (m.ok()) {
    const auto v = CheckFeasible(inst, *m, QuotaMode::kWithGlobalTypes);
    ASSERT_FALSE(v.empty());
    EXPECT_EQ(v[0].kind, ViolationKind::kUnknownAssignment);
  } else {
    EXPECT_THAT(m.status().message(), HasSubstr("UnknownAssignment"));
  }
}

TEST(MatchingFormatTest, DocumentConceptCarriesOverrides) {
  MatchingDocument doc;
  doc.header["concept"] = "Min#E-CWTEFM@u=5 no-wtef";
  auto c = DocumentConcept(doc);
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c->name, ConceptName::kMinEnvyCwtefm);
  EXPECT_EQ(c->override_upper, 5);
  doc.header["concept"] = "Nonsense";
  EXPECT_FALSE(DocumentConcept(doc).ok());
}

}  // namespace
}  // namespace quotamatch
