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

// Deliberately naive restatements of the matching predicates, written from
// the definitions against raw preference lists, plus a tiny random market
// generator. Used to cross-check the library checkers.

#ifndef QUOTAMATCH_TESTS_REFERENCE_H_
#define QUOTAMATCH_TESTS_REFERENCE_H_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "quotamatch/core/instance.h"
#include "quotamatch/core/matching.h"

namespace quotamatch::testing {

inline int PrefPosition(const Instance& inst, int i, int j) {
  const auto& p = inst.applicant(i).preferences;
  auto it = std::find(p.begin(), p.end(), j);
  return it == p.end() ? 1 << 20 : static_cast<int>(it - p.begin());
}

// a_i wants c_j: unmatched, or c_j is listed before its current company.
inline bool ApplicantWants(const Instance& inst, const Matching& m, int i,
                           int j) {
  if (!m.is_matched(i)) return true;
  return PrefPosition(inst, i, j) < PrefPosition(inst, i, m.company_of(i));
}

inline std::set<std::pair<int, int>> NaiveBlockingPairs(const Instance& inst,
                                                        const Matching& m) {
  std::set<std::pair<int, int>> out;
  for (int i = 0; i < inst.num_applicants(); ++i) {
    for (int j : inst.applicant(i).preferences) {
      if (m.company_of(i) == j || !ApplicantWants(inst, m, i, j)) continue;
      int count = 0;
      bool weaker = false;
      for (int h = 0; h < inst.num_applicants(); ++h) {
        if (m.company_of(h) != j) continue;
        ++count;
        if (inst.score(h, j) < inst.score(i, j)) weaker = true;
      }
      if (count < inst.company(j).upper || weaker) out.insert({i, j});
    }
  }
  return out;
}

// (envier, envied, company, intensity)
using NaiveEnvy = std::tuple<int, int, int, Score>;

inline std::set<NaiveEnvy> NaiveEnvies(const Instance& inst, const Matching& m,
                                       bool same_type) {
  std::set<NaiveEnvy> out;
  for (int h = 0; h < inst.num_applicants(); ++h) {
    if (!m.is_matched(h)) continue;
    const int j = m.company_of(h);
    for (int i = 0; i < inst.num_applicants(); ++i) {
      if (i == h || !inst.has_application(i, j)) continue;
      if ((inst.type_of(i) == inst.type_of(h)) != same_type) continue;
      if (inst.score(i, j) <= inst.score(h, j)) continue;
      if (!ApplicantWants(inst, m, i, j)) continue;
      out.insert({i, h, j, inst.score(i, j) - inst.score(h, j)});
    }
  }
  return out;
}

struct RandomMarketOptions {
  int max_applicants = 5;
  int max_companies = 3;
  int num_types = 1;
  bool full_lists = false;
  int score_levels = 4;  // scores drawn from {0, 2, ..., 2*(levels-1)}
  int max_upper = 2;
  bool lower_quotas = false;
};

inline Instance RandomMarket(std::mt19937& rng, const RandomMarketOptions& o) {
  std::uniform_int_distribution<int> n_dist(1, o.max_applicants);
  std::uniform_int_distribution<int> m_dist(1, o.max_companies);
  const int n = n_dist(rng);
  const int m = m_dist(rng);
  std::vector<std::string> types;
  for (int k = 0; k < o.num_types; ++k) types.push_back("t" + std::to_string(k));
  std::vector<Applicant> applicants;
  std::vector<Application> apps;
  std::uniform_int_distribution<int> type_dist(0, o.num_types - 1);
  std::uniform_int_distribution<int> score_dist(0, o.score_levels - 1);
  for (int i = 0; i < n; ++i) {
    std::vector<int> prefs(m);
    for (int j = 0; j < m; ++j) prefs[j] = j;
    std::shuffle(prefs.begin(), prefs.end(), rng);
    if (!o.full_lists) {
      std::uniform_int_distribution<int> len(1, m);
      prefs.resize(len(rng));
    }
    applicants.push_back({"a" + std::to_string(i + 1), type_dist(rng), prefs});
    for (int j : prefs) apps.push_back({i, j, 0, 2 * score_dist(rng)});
  }
  std::vector<Company> companies;
  std::uniform_int_distribution<int> up_dist(0, o.max_upper);
  for (int j = 0; j < m; ++j) {
    const int u = up_dist(rng);
    int l = 0;
    if (o.lower_quotas) {
      std::uniform_int_distribution<int> lo_dist(0, u);
      l = lo_dist(rng);
    }
    companies.push_back({"c" + std::to_string(j + 1), l, u, {}, {}});
  }
  return Instance(types, applicants, companies, apps);
}

// Every matching of the instance where each applicant takes one listed company
// or stays unmatched (no quota filter).
inline std::vector<Matching> AllAssignments(const Instance& inst) {
  std::vector<Matching> out;
  Matching m(inst.num_applicants());
  auto rec = [&](auto&& self, int i) -> void {
    if (i == inst.num_applicants()) {
      out.push_back(m);
      return;
    }
    for (int j : inst.applicant(i).preferences) {
      m.Assign(i, j);
      self(self, i + 1);
    }
    m.Unassign(i);
    self(self, i + 1);
  };
  rec(rec, 0);
  return out;
}

}  // namespace quotamatch::testing

#endif  // QUOTAMATCH_TESTS_REFERENCE_H_
