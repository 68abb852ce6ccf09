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

#include "quotamatch/core/matching.h"

#include <algorithm>

namespace quotamatch {

int Matching::size() const {
  return static_cast<int>(std::count_if(company_of_.begin(), company_of_.end(),
                                        [](int j) { return j != kUnmatched; }));
}

Matching::Matching(int num_applicants,
                   std::initializer_list<std::pair<int, int>> pairs)
    : company_of_(num_applicants, kUnmatched) {
  for (auto [i, j] : pairs) company_of_[i] = j;
}

std::vector<std::pair<int, int>> Matching::Pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < num_applicants(); ++i) {
    if (company_of_[i] != kUnmatched) out.emplace_back(i, company_of_[i]);
  }
  return out;
}

}  // namespace quotamatch
