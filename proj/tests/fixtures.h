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

// Small hand-built markets shared by the test suites.

#ifndef QUOTAMATCH_TESTS_FIXTURES_H_
#define QUOTAMATCH_TESTS_FIXTURES_H_

#include <string>
#include <vector>

#include "quotamatch/core/instance.h"

namespace quotamatch::testing {

// Two applicants with equal scores at c1; a2 also lists c2 second.
//   a1: c1          a2: c1 c2
//   s(a1,c1) = s(a2,c1) = 5, s(a2,c2) = 5, all upper quotas 1.
inline Instance TieExample(int upper_c1 = 1, int upper_c2 = 1, int lower_c1 = 0,
                           int lower_c2 = 0) {
  std::vector<Applicant> applicants = {{"a1", 0, {0}}, {"a2", 0, {0, 1}}};
  std::vector<Company> companies = {{"c1", lower_c1, upper_c1, {}, {}},
                                    {"c2", lower_c2, upper_c2, {}, {}}};
  std::vector<Application> apps = {
      {0, 0, 0, 10}, {1, 0, 0, 10}, {1, 1, 0, 10}};
  return Instance({"all"}, applicants, companies, apps);
}

// Three companies of quota 1, five applicants who all rank c1 > c2 > c3.
// Types: {a1, a2, a3} first, {a4, a5} second. `type1_bonus` is added to the
// raw score of the first-type applicants (whole points).
inline Instance NonMonotoneExample(int type1_bonus = 0, bool typed = true) {
  const int raw[5][3] = {{5, 7, 1}, {1, 1, 3}, {1, 1, 1}, {6, 1, 6}, {2, 6, 2}};
  std::vector<Applicant> applicants;
  std::vector<Application> apps;
  for (int i = 0; i < 5; ++i) {
    const int type = typed && i >= 3 ? 1 : 0;
    applicants.push_back({"a" + std::to_string(i + 1), type, {0, 1, 2}});
    for (int j = 0; j < 3; ++j) {
      const int bonus = i < 3 ? type1_bonus : 0;
      apps.push_back({i, j, 0, 2 * (raw[i][j] + bonus)});
    }
  }
  std::vector<Company> companies = {
      {"c1", 0, 1, {}, {}}, {"c2", 0, 1, {}, {}}, {"c3", 0, 1, {}, {}}};
  std::vector<std::string> types =
      typed ? std::vector<std::string>{"t1", "t2"} : std::vector<std::string>{"all"};
  return Instance(types, applicants, companies, apps);
}

}  // namespace quotamatch::testing

#endif  // QUOTAMATCH_TESTS_FIXTURES_H_
