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

#include "quotamatch/pipelines/concept.h"

#include <string>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace quotamatch {
namespace {

struct NameEntry {
  ConceptName name;
  std::string_view text;
};

constexpr NameEntry kNames[] = {
    {ConceptName::kMinRankStable, "MinRank-Stable"},
    {ConceptName::kMinDeficiency, "MinDeficiency"},
    {ConceptName::kAlmostStable, "AlmostStable"},
    {ConceptName::kMinRankEf, "MinRank-EF"},
    {ConceptName::kMinOsbEf, "MinOSB-EF"},
    {ConceptName::kMinEnvyCwtefm, "Min#E-CWTEFM"},
    {ConceptName::kMinEiCwtefm, "MinEI-CWTEFM"},
    {ConceptName::kMinRankMinEnvyCwtefm, "MinRank-Min#E-CWTEFM"},
    {ConceptName::kMinRankMinEiCwtefm, "MinRank-MinEI-CWTEFM"},
    {ConceptName::kMinOsbMinEnvyCwtefm, "MinOSB-Min#E-CWTEFM"},
    {ConceptName::kMinOsbMinEiCwtefm, "MinOSB-MinEI-CWTEFM"},
    {ConceptName::kEqualTypeScores, "EqualTypeScores"},
};

absl::Status ParseOverride(absl::string_view item, SolutionConcept& c) {
  std::pair<absl::string_view, absl::string_view> kv =
      absl::StrSplit(item, absl::MaxSplits('=', 1));
  const std::string key = absl::AsciiStrToLower(
      std::string(absl::StripAsciiWhitespace(kv.first)));
  int value = 0;
  if (!absl::SimpleAtoi(kv.second, &value) || value < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad quota override '", item, "'"));
  }
  if (key == "u") {
    c.override_upper = value;
  } else if (key == "l") {
    c.override_lower = value;
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown override '", kv.first, "' (expected u or l)"));
  }
  return absl::OkStatus();
}

}  // namespace

std::string_view ConceptNameString(ConceptName name) {
  for (const NameEntry& e : kNames) {
    if (e.name == name) return e.text;
  }
  return "?";
}

std::vector<ConceptName> AllConcepts() {
  std::vector<ConceptName> out;
  for (const NameEntry& e : kNames) out.push_back(e.name);
  return out;
}

std::vector<ConceptName> ProgramConcepts() {
  std::vector<ConceptName> out = AllConcepts();
  out.pop_back();
  return out;
}

absl::StatusOr<SolutionConcept> ParseConcept(std::string_view raw) {
  const absl::string_view text(raw.data(), raw.size());
  std::pair<absl::string_view, absl::string_view> parts =
      absl::StrSplit(text, absl::MaxSplits('@', 1));
  const std::string wanted = absl::AsciiStrToLower(
      std::string(absl::StripAsciiWhitespace(parts.first)));
  SolutionConcept c;
  bool found = false;
  for (const NameEntry& e : kNames) {
    if (absl::AsciiStrToLower(std::string(e.text)) == wanted) {
      c.name = e.name;
      found = true;
    }
  }
  if (!found) {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown concept '", parts.first, "'"));
  }
  if (!parts.second.empty()) {
    for (absl::string_view item : absl::StrSplit(parts.second, ',')) {
      absl::Status s = ParseOverride(item, c);
      if (!s.ok()) return s;
    }
  }
  return c;
}

std::string DescribeConcept(const SolutionConcept& concept_) {
  std::string out(ConceptNameString(concept_.name));
  std::string sep = "@";
  if (concept_.override_upper) {
    absl::StrAppend(&out, sep, "u=", *concept_.override_upper);
    sep = ",";
  }
  if (concept_.override_lower) {
    absl::StrAppend(&out, sep, "l=", *concept_.override_lower);
  }
  if (!concept_.ties) absl::StrAppend(&out, " strict");
  if (!concept_.wtef) absl::StrAppend(&out, " no-wtef");
  return out;
}

Instance ApplyOverrides(const Instance& inst, const SolutionConcept& concept_) {
  Instance out = inst;
  if (concept_.override_upper) out = out.WithUpperQuota(*concept_.override_upper);
  if (concept_.override_lower) out = out.WithLowerQuota(*concept_.override_lower);
  return out;
}

std::string_view ObjectiveKindName(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kUnmatched:
      return "Unmatched";
    case ObjectiveKind::kRank:
      return "Rank";
    case ObjectiveKind::kDeficiency:
      return "Deficiency";
    case ObjectiveKind::kBlocking:
      return "Blocking";
    case ObjectiveKind::kCrossEnvyCount:
    case ObjectiveKind::kAllEnvyCount:
      return "EnvyCount";
    case ObjectiveKind::kCrossEnvyIntensity:
    case ObjectiveKind::kAllEnvyIntensity:
      return "EnvyIntensity";
    case ObjectiveKind::kOpenSlot:
      return "OpenSlot";
  }
  return "?";
}

bool IsCwtefm(ConceptName name) {
  switch (name) {
    case ConceptName::kMinEnvyCwtefm:
    case ConceptName::kMinEiCwtefm:
    case ConceptName::kMinRankMinEnvyCwtefm:
    case ConceptName::kMinRankMinEiCwtefm:
    case ConceptName::kMinOsbMinEnvyCwtefm:
    case ConceptName::kMinOsbMinEiCwtefm:
      return true;
    default:
      return false;
  }
}

ConceptDefinition DefineConcept(const SolutionConcept& concept_) {
  using O = ObjectiveKind;
  ConceptDefinition d;
  if (IsCwtefm(concept_.name)) {
    d.complete = true;
    d.admissibility = concept_.wtef ? Admissibility::kWithinTypeEnvyFree
                                    : Admissibility::kAny;
    const bool by_count = concept_.name == ConceptName::kMinEnvyCwtefm ||
                          concept_.name == ConceptName::kMinRankMinEnvyCwtefm ||
                          concept_.name == ConceptName::kMinOsbMinEnvyCwtefm;
    O envy;
    if (by_count) {
      envy = concept_.wtef ? O::kCrossEnvyCount : O::kAllEnvyCount;
    } else {
      envy = concept_.wtef ? O::kCrossEnvyIntensity : O::kAllEnvyIntensity;
    }
    d.objectives = {envy};
    if (concept_.name == ConceptName::kMinRankMinEnvyCwtefm ||
        concept_.name == ConceptName::kMinRankMinEiCwtefm) {
      d.objectives.push_back(O::kRank);
    }
    if (concept_.name == ConceptName::kMinOsbMinEnvyCwtefm ||
        concept_.name == ConceptName::kMinOsbMinEiCwtefm) {
      d.objectives.push_back(O::kOpenSlot);
    }
    return d;
  }
  switch (concept_.name) {
    case ConceptName::kMinRankStable:
      d.admissibility = Admissibility::kStable;
      d.strong_stability = !concept_.ties;
      d.objectives = {O::kUnmatched, O::kRank};
      break;
    case ConceptName::kMinDeficiency:
      d.objectives = {O::kDeficiency, O::kUnmatched, O::kRank};
      break;
    case ConceptName::kAlmostStable:
      d.objectives = {O::kBlocking, O::kUnmatched, O::kRank};
      break;
    case ConceptName::kMinRankEf:
      d.admissibility = Admissibility::kEnvyFree;
      d.objectives = {O::kUnmatched, O::kRank};
      break;
    case ConceptName::kMinOsbEf:
      d.admissibility = Admissibility::kEnvyFree;
      d.objectives = {O::kUnmatched, O::kOpenSlot, O::kRank};
      break;
    default:
      break;
  }
  return d;
}

}  // namespace quotamatch
