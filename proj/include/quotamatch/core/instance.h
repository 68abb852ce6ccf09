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

#ifndef QUOTAMATCH_CORE_INSTANCE_H_
#define QUOTAMATCH_CORE_INSTANCE_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace quotamatch {

// Scores are kept on a doubled integer scale so that half points stay exact:
// a displayed score of 7.5 is stored as 15.
using Score = int64_t;

inline constexpr int kUnbounded = std::numeric_limits<int>::max();
inline constexpr int kNoApplication = -1;

struct Applicant {
  std::string name;
  int type = 0;
  // Company indices, most preferred first. Rank of preferences[r] is r + 1.
  std::vector<int> preferences;
};

struct Company {
  std::string name;
  int lower = 0;
  int upper = 0;
  // Per-type quotas, indexed by type. Empty vectors mean "no type quota":
  // lower 0 and upper equal to `upper`.
  std::vector<int> type_lower;
  std::vector<int> type_upper;
};

struct Application {
  int applicant = 0;
  int company = 0;
  // 1-based position of `company` in the applicant's list; 0 when the company
  // is not listed (an invalid instance).
  int rank = 0;
  Score score = 0;
};

// A complete two-sided market with distributional constraints. Instances may
// be constructed from invalid data; ValidateInstance() reports the problems,
// and every other operation assumes a valid instance.
class Instance {
 public:
  Instance() : type_names_{"all"} { Index(); }
  Instance(std::vector<std::string> type_names,
           std::vector<Applicant> applicants, std::vector<Company> companies,
           std::vector<Application> applications,
           std::vector<int> global_type_lower = {},
           std::vector<int> global_type_upper = {});

  int num_applicants() const { return static_cast<int>(applicants_.size()); }
  int num_companies() const { return static_cast<int>(companies_.size()); }
  int num_types() const { return static_cast<int>(type_names_.size()); }

  const std::vector<std::string>& type_names() const { return type_names_; }
  const std::string& type_name(int k) const { return type_names_[k]; }
  const std::vector<Applicant>& applicants() const { return applicants_; }
  const Applicant& applicant(int i) const { return applicants_[i]; }
  const std::vector<Company>& companies() const { return companies_; }
  const Company& company(int j) const { return companies_[j]; }
  int type_of(int i) const { return applicants_[i].type; }

  // Raw application list in input order.
  const std::vector<Application>& applications() const { return applications_; }
  int num_applications() const { return static_cast<int>(applications_.size()); }
  const Application& application(int index) const {
    return applications_[index];
  }

  // Index into applications() for (i, j), or kNoApplication.
  int application_index(int i, int j) const;
  bool has_application(int i, int j) const {
    return application_index(i, j) != kNoApplication;
  }
  Score score(int i, int j) const;
  int rank(int i, int j) const;

  // Application indices of applicant i, in preference order.
  std::span<const int> applications_of(int i) const { return by_applicant_[i]; }
  // Application indices to company j, ascending applicant index.
  std::span<const int> applications_to(int j) const { return by_company_[j]; }

  int type_lower(int j, int k) const;
  int type_upper(int j, int k) const;
  int global_lower(int k) const;
  // kUnbounded when no global upper quota is set for type k.
  int global_upper(int k) const;
  const std::vector<int>& global_type_lower() const { return global_lower_; }
  const std::vector<int>& global_type_upper() const { return global_upper_; }

  // Number of applicants of type k.
  int type_population(int k) const { return type_population_[k]; }
  // Maximum score over all applications (doubled scale); 0 when empty.
  Score max_score() const { return max_score_; }
  int total_capacity() const;

  // True iff every applicant lists every company.
  bool has_complete_lists() const;

  // Same instance with every company's upper (resp. lower) quota replaced.
  // Type upper quotas are clamped so that they never exceed the new upper.
  Instance WithUpperQuota(int upper) const;
  Instance WithLowerQuota(int lower) const;
  // Same instance with scores replaced application-by-application.
  Instance WithScores(std::span<const Score> scores) const;

  int FindType(const std::string& name) const;
  int FindApplicant(const std::string& name) const;
  int FindCompany(const std::string& name) const;

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  void Index();

  std::vector<std::string> type_names_;
  std::vector<Applicant> applicants_;
  std::vector<Company> companies_;
  std::vector<Application> applications_;
  std::vector<int> global_lower_;
  std::vector<int> global_upper_;

  // Derived.
  std::vector<int> pair_index_;  // num_applicants * num_companies
  std::vector<std::vector<int>> by_applicant_;
  std::vector<std::vector<int>> by_company_;
  std::vector<int> type_population_;
  Score max_score_ = 0;
};

}  // namespace quotamatch

#endif  // QUOTAMATCH_CORE_INSTANCE_H_
