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

#include "quotamatch/core/instance.h"

#include <algorithm>
#include <utility>

namespace quotamatch {

Instance::Instance(std::vector<std::string> type_names,
                   std::vector<Applicant> applicants,
                   std::vector<Company> companies,
                   std::vector<Application> applications,
                   std::vector<int> global_type_lower,
                   std::vector<int> global_type_upper)
    : type_names_(std::move(type_names)),
      applicants_(std::move(applicants)),
      companies_(std::move(companies)),
      applications_(std::move(applications)),
      global_lower_(std::move(global_type_lower)),
      global_upper_(std::move(global_type_upper)) {
  if (type_names_.empty()) type_names_.push_back("all");
  Index();
}

void Instance::Index() {
  const int n = num_applicants();
  const int m = num_companies();
  const int p = num_types();
  global_lower_.resize(p, 0);
  global_upper_.resize(p, kUnbounded);

  pair_index_.assign(static_cast<size_t>(n) * m, kNoApplication);
  by_applicant_.assign(n, {});
  by_company_.assign(m, {});
  max_score_ = 0;
  for (int a = 0; a < num_applications(); ++a) {
    Application& app = applications_[a];
    app.rank = 0;
    if (app.applicant < 0 || app.applicant >= n || app.company < 0 ||
        app.company >= m) {
      continue;
    }
    int& slot = pair_index_[static_cast<size_t>(app.applicant) * m + app.company];
    if (slot != kNoApplication) continue;  // duplicate; first one wins
    const auto& prefs = applicants_[app.applicant].preferences;
    auto it = std::find(prefs.begin(), prefs.end(), app.company);
    if (it == prefs.end()) continue;
    app.rank = static_cast<int>(it - prefs.begin()) + 1;
    slot = a;
    by_company_[app.company].push_back(a);
    max_score_ = std::max(max_score_, app.score);
  }
  for (int i = 0; i < n; ++i) {
    for (int j : applicants_[i].preferences) {
      if (j < 0 || j >= m) continue;
      int a = pair_index_[static_cast<size_t>(i) * m + j];
      if (a == kNoApplication) continue;
      if (std::find(by_applicant_[i].begin(), by_applicant_[i].end(), a) ==
          by_applicant_[i].end()) {
        by_applicant_[i].push_back(a);
      }
    }
  }
  for (auto& list : by_company_) {
    std::sort(list.begin(), list.end(), [this](int x, int y) {
      return applications_[x].applicant < applications_[y].applicant;
    });
  }
  type_population_.assign(p, 0);
  for (const Applicant& a : applicants_) {
    if (a.type >= 0 && a.type < p) ++type_population_[a.type];
  }
}

int Instance::application_index(int i, int j) const {
  if (i < 0 || i >= num_applicants() || j < 0 || j >= num_companies()) {
    return kNoApplication;
  }
  return pair_index_[static_cast<size_t>(i) * num_companies() + j];
}

Score Instance::score(int i, int j) const {
  int a = application_index(i, j);
  return a == kNoApplication ? 0 : applications_[a].score;
}

int Instance::rank(int i, int j) const {
  int a = application_index(i, j);
  return a == kNoApplication ? 0 : applications_[a].rank;
}

int Instance::type_lower(int j, int k) const {
  const Company& c = companies_[j];
  return k < static_cast<int>(c.type_lower.size()) ? c.type_lower[k] : 0;
}

int Instance::type_upper(int j, int k) const {
  const Company& c = companies_[j];
  return k < static_cast<int>(c.type_upper.size()) ? c.type_upper[k] : c.upper;
}

int Instance::global_lower(int k) const { return global_lower_[k]; }
int Instance::global_upper(int k) const { return global_upper_[k]; }

int Instance::total_capacity() const {
  int total = 0;
  for (const Company& c : companies_) total += c.upper;
  return total;
}

bool Instance::has_complete_lists() const {
  for (int i = 0; i < num_applicants(); ++i) {
    if (static_cast<int>(by_applicant_[i].size()) != num_companies()) {
      return false;
    }
  }
  return true;
}

Instance Instance::WithUpperQuota(int upper) const {
  Instance copy = *this;
  for (Company& c : copy.companies_) {
    c.upper = upper;
    c.lower = std::min(c.lower, upper);
    for (int& u : c.type_upper) u = std::min(u, upper);
    for (int& l : c.type_lower) l = std::min(l, upper);
  }
  return copy;
}

Instance Instance::WithLowerQuota(int lower) const {
  Instance copy = *this;
  for (Company& c : copy.companies_) c.lower = lower;
  return copy;
}

Instance Instance::WithScores(std::span<const Score> scores) const {
  Instance copy = *this;
  for (int a = 0; a < num_applications() && a < static_cast<int>(scores.size());
       ++a) {
    copy.applications_[a].score = scores[a];
  }
  copy.Index();
  return copy;
}

int Instance::FindType(const std::string& name) const {
  auto it = std::find(type_names_.begin(), type_names_.end(), name);
  return it == type_names_.end() ? -1 : static_cast<int>(it - type_names_.begin());
}

int Instance::FindApplicant(const std::string& name) const {
  for (int i = 0; i < num_applicants(); ++i) {
    if (applicants_[i].name == name) return i;
  }
  return -1;
}

int Instance::FindCompany(const std::string& name) const {
  for (int j = 0; j < num_companies(); ++j) {
    if (companies_[j].name == name) return j;
  }
  return -1;
}

bool operator==(const Instance& a, const Instance& b) {
  if (a.type_names_ != b.type_names_) return false;
  if (a.global_lower_ != b.global_lower_ || a.global_upper_ != b.global_upper_) {
    return false;
  }
  if (a.num_applicants() != b.num_applicants() ||
      a.num_companies() != b.num_companies()) {
    return false;
  }
  for (int i = 0; i < a.num_applicants(); ++i) {
    const Applicant& x = a.applicants_[i];
    const Applicant& y = b.applicants_[i];
    if (x.name != y.name || x.type != y.type || x.preferences != y.preferences) {
      return false;
    }
  }
  for (int j = 0; j < a.num_companies(); ++j) {
    const Company& x = a.companies_[j];
    const Company& y = b.companies_[j];
    if (x.name != y.name || x.lower != y.lower || x.upper != y.upper) {
      return false;
    }
    for (int k = 0; k < a.num_types(); ++k) {
      if (a.type_lower(j, k) != b.type_lower(j, k) ||
          a.type_upper(j, k) != b.type_upper(j, k)) {
        return false;
      }
    }
  }
  // Applications compare as a set keyed by (applicant, company).
  if (a.num_applications() != b.num_applications()) return false;
  for (const Application& app : a.applications_) {
    int other = b.application_index(app.applicant, app.company);
    if (other == kNoApplication) return false;
    if (b.applications_[other].score != app.score) return false;
  }
  return true;
}

}  // namespace quotamatch
