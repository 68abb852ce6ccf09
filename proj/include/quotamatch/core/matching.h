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

#ifndef QUOTAMATCH_CORE_MATCHING_H_
#define QUOTAMATCH_CORE_MATCHING_H_

#include <initializer_list>
#include <utility>
#include <vector>

namespace quotamatch {

// Partial map applicant -> company. Whether each assigned pair is an actual
// application is checked by CheckFeasible(), not enforced here.
class Matching {
 public:
  static constexpr int kUnmatched = -1;

  Matching() = default;
  explicit Matching(int num_applicants)
      : company_of_(num_applicants, kUnmatched) {}
  Matching(int num_applicants,
           std::initializer_list<std::pair<int, int>> pairs);

  int num_applicants() const { return static_cast<int>(company_of_.size()); }
  int company_of(int i) const { return company_of_[i]; }
  bool is_matched(int i) const { return company_of_[i] != kUnmatched; }

  void Assign(int i, int j) { company_of_[i] = j; }
  void Unassign(int i) { company_of_[i] = kUnmatched; }

  // Number of assigned applicants.
  int size() const;
  // (applicant, company) pairs in ascending applicant order.
  std::vector<std::pair<int, int>> Pairs() const;
  const std::vector<int>& assignment() const { return company_of_; }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<int> company_of_;
};

}  // namespace quotamatch

#endif  // QUOTAMATCH_CORE_MATCHING_H_
