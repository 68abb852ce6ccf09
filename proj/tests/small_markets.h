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

// Seeded desk-size markets drawn through the generator, with quota shapes
// varied per seed so that every constraint family gets exercised.

#ifndef QUOTAMATCH_TESTS_SMALL_MARKETS_H_
#define QUOTAMATCH_TESTS_SMALL_MARKETS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "quotamatch/gen/generator.h"
#include "quotamatch/pipelines/concept.h"

namespace quotamatch::testing {

inline GenParams SmallMarketParams(uint64_t seed, double tie_density) {
  std::mt19937_64 rng(seed * 7919 + 17);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  GenParams p;
  p.seed = seed;
  p.num_applicants = pick(1, 6);
  p.num_companies = pick(1, 3);
  p.tie_density = tie_density;
  p.min_score = 1;
  p.max_score = 5;
  p.full_lists = true;
  p.type_names = {"local", "foreign"};
  const int foreign = pick(0, p.num_applicants);
  p.type_counts = {p.num_applicants - foreign, foreign};
  p.upper = pick(1, 3);
  p.lower = pick(0, 2) == 0 ? pick(0, p.upper) : 0;
  switch (pick(0, 3)) {
    case 0:
      p.type_upper = {p.upper, pick(0, p.upper)};
      break;
    case 1:
      p.type_lower = {0, pick(0, 1)};
      break;
    case 2:
      p.global_lower = {0, pick(0, foreign)};
      p.global_upper = {p.num_applicants, pick(p.global_lower[1], foreign)};
      break;
    default:
      break;
  }
  return p;
}

// Every programme concept, plus the strict and relaxed-envy variants.
inline std::vector<SolutionConcept> EveryProgramVariant() {
  std::vector<SolutionConcept> out;
  for (ConceptName name : ProgramConcepts()) {
    out.push_back({name});
    if (name == ConceptName::kMinRankStable) {
      SolutionConcept strict{name};
      strict.ties = false;
      out.push_back(strict);
    }
    if (IsCwtefm(name)) {
      SolutionConcept relaxed{name};
      relaxed.wtef = false;
      out.push_back(relaxed);
    }
  }
  return out;
}

}  // namespace quotamatch::testing

#endif  // QUOTAMATCH_TESTS_SMALL_MARKETS_H_
