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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "quotamatch/core/checks.h"

namespace quotamatch {

std::string_view QuotaProfileName(QuotaProfile profile) {
  switch (profile) {
    case QuotaProfile::kUniform: return "uniform";
    case QuotaProfile::kApplicationShape2016: return "2016";
    case QuotaProfile::kApplicationShape2017: return "2017";
    case QuotaProfile::kWorkshopShape: return "workshop";
  }
  return "?";
}

std::optional<QuotaProfile> ParseQuotaProfile(std::string_view name) {
  const std::string lower = absl::AsciiStrToLower(std::string(name));
  for (QuotaProfile p :
       {QuotaProfile::kUniform, QuotaProfile::kApplicationShape2016,
        QuotaProfile::kApplicationShape2017, QuotaProfile::kWorkshopShape}) {
    if (lower == QuotaProfileName(p)) return p;
  }
  return std::nullopt;
}

GenParams ApplyShape(GenParams params, QuotaProfile profile) {
  params.profile = profile;
  params.type_lower.clear();
  params.type_upper.clear();
  params.global_lower.clear();
  params.global_upper.clear();
  switch (profile) {
    case QuotaProfile::kUniform:
      break;
    case QuotaProfile::kApplicationShape2016:
      params.num_applicants = 25;
      params.num_companies = 5;
      params.type_names = {"local", "foreign"};
      params.type_counts = {20, 5};
      params.lower = 4;
      params.upper = 6;
      params.type_upper = {6, 2};
      break;
    case QuotaProfile::kApplicationShape2017:
      params.num_applicants = 40;
      params.num_companies = 8;
      params.type_names = {"local", "foreign"};
      params.type_counts = {27, 13};
      params.lower = 3;
      params.upper = 6;
      params.type_lower = {0, 1};
      break;
    case QuotaProfile::kWorkshopShape:
      params.num_applicants = 63;
      params.num_companies = 3;
      params.type_names = {"hungarian", "regional", "other"};
      params.type_counts = {29, 15, 19};
      params.global_lower = {25, 12, 10};
      params.global_upper = {25, 12, 10};
      params.full_lists = true;
      break;
  }
  return params;
}

namespace {

// Seats per workshop company after removing `preselected` seats, split in
// proportion to the original seats by largest remainder.
std::vector<int> WorkshopSeats(int preselected) {
  const std::vector<int> seats = {16, 22, 22};
  const int total = std::accumulate(seats.begin(), seats.end(), 0);
  std::vector<int> removed(seats.size());
  std::vector<std::pair<int, int>> remainders;  // (-remainder, company)
  int assigned = 0;
  for (size_t j = 0; j < seats.size(); ++j) {
    removed[j] = preselected * seats[j] / total;
    assigned += removed[j];
    remainders.push_back({-(preselected * seats[j] % total), static_cast<int>(j)});
  }
  std::sort(remainders.begin(), remainders.end());
  for (int r = 0; r < preselected - assigned; ++r) ++removed[remainders[r].second];
  std::vector<int> out(seats.size());
  for (size_t j = 0; j < seats.size(); ++j) out[j] = seats[j] - removed[j];
  return out;
}

// Doubled-scale scores for one company.
std::vector<Score> CompanyScores(const GenParams& p, int count,
                                 std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Score> out(count);
  const int whole_levels = p.max_score - p.min_score + 1;
  if (p.tie_density <= 0.0) {
    // Half-point grid from min to max, each value used as evenly as possible.
    std::vector<Score> grid;
    for (Score s = 2 * p.min_score; s <= 2 * p.max_score; ++s) grid.push_back(s);
    std::vector<Score> pool;
    while (static_cast<int>(pool.size()) < count) {
      std::vector<Score> round = grid;
      std::shuffle(round.begin(), round.end(), rng);
      const int take = std::min<int>(count - static_cast<int>(pool.size()),
                                     static_cast<int>(round.size()));
      pool.insert(pool.end(), round.begin(), round.begin() + take);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    return pool;
  }
  // Coarser grids as the density grows: from every whole point down to one.
  const int levels = std::max(
      1, static_cast<int>(std::lround((whole_levels - 1) * (1.0 - p.tie_density))) + 1);
  std::uniform_int_distribution<int> level(0, levels - 1);
  for (Score& s : out) {
    const int k = level(rng);
    const int whole =
        levels == 1 ? p.max_score
                    : p.min_score + k * (whole_levels - 1) / (levels - 1);
    s = 2 * whole;
    if (whole < p.max_score && unit(rng) < p.half_point_prob) ++s;
  }
  return out;
}

}  // namespace

absl::StatusOr<Instance> Generate(const GenParams& p) {
  if (p.num_applicants < 0 || p.num_companies < 0) {
    return absl::InvalidArgumentError("negative market size");
  }
  if (p.type_names.empty()) {
    return absl::InvalidArgumentError("at least one type is required");
  }
  const int num_types = static_cast<int>(p.type_names.size());
  std::vector<int> counts = p.type_counts;
  if (counts.empty()) {
    counts.assign(num_types, 0);
    counts[0] = p.num_applicants;
  }
  if (static_cast<int>(counts.size()) != num_types ||
      std::accumulate(counts.begin(), counts.end(), 0) != p.num_applicants) {
    return absl::InvalidArgumentError(
        absl::StrCat("type counts must list one count per type and sum to ",
                     p.num_applicants));
  }
  if (p.min_score < 0 || p.min_score > p.max_score) {
    return absl::InvalidArgumentError("empty score range");
  }
  if (p.min_list_length < 1 && p.num_companies > 0 && !p.full_lists) {
    return absl::InvalidArgumentError("min_list_length must be positive");
  }
  for (const auto* v : {&p.type_lower, &p.type_upper, &p.global_lower,
                        &p.global_upper}) {
    if (!v->empty() && static_cast<int>(v->size()) != num_types) {
      return absl::InvalidArgumentError("type quota lists need one entry per type");
    }
  }

  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Company> companies;
  std::vector<int> workshop_seats;
  if (p.profile == QuotaProfile::kWorkshopShape) {
    if (p.num_companies != 3 || p.preselected < 0 || p.preselected > 60) {
      return absl::InvalidArgumentError(
          "the workshop shape has 3 companies and at most 60 preselected seats");
    }
    workshop_seats = WorkshopSeats(p.preselected);
  }
  for (int j = 0; j < p.num_companies; ++j) {
    Company c;
    c.name = absl::StrCat("c", j + 1);
    if (!workshop_seats.empty()) {
      c.lower = c.upper = workshop_seats[j];
      if (j == 0) {
        c.type_lower.assign(num_types, 0);
        c.type_lower[0] = std::min(8, c.upper);
      }
    } else {
      c.lower = p.lower;
      c.upper = p.upper;
      if (!p.type_lower.empty()) c.type_lower = p.type_lower;
      if (!p.type_upper.empty()) {
        c.type_upper = p.type_upper;
        for (int& t : c.type_upper) t = std::min(t, c.upper);
      }
    }
    companies.push_back(std::move(c));
  }

  // Company popularity weights, fixed per market.
  std::vector<double> weight(p.num_companies, 1.0);
  for (double& w : weight) w = std::exp(p.popularity * unit(rng));

  std::vector<Applicant> applicants;
  int type = 0;
  int left_in_type = counts[0];
  for (int i = 0; i < p.num_applicants; ++i) {
    while (left_in_type == 0) left_in_type = counts[++type];
    --left_in_type;
    // Weighted sampling without replacement (Plackett-Luce order).
    std::vector<int> remaining(p.num_companies);
    std::iota(remaining.begin(), remaining.end(), 0);
    std::vector<int> prefs;
    while (!remaining.empty()) {
      double total = 0;
      for (int j : remaining) total += weight[j];
      double draw = unit(rng) * total;
      size_t pick = 0;
      while (pick + 1 < remaining.size() && draw >= weight[remaining[pick]]) {
        draw -= weight[remaining[pick]];
        ++pick;
      }
      prefs.push_back(remaining[pick]);
      remaining.erase(remaining.begin() + pick);
    }
    if (!p.full_lists && p.num_companies > 0) {
      const int lo = std::min(p.min_list_length, p.num_companies);
      std::uniform_int_distribution<int> len(lo, p.num_companies);
      prefs.resize(len(rng));
    }
    applicants.push_back({absl::StrCat("a", i + 1), type, std::move(prefs)});
  }

  std::vector<Application> apps;
  for (int j = 0; j < p.num_companies; ++j) {
    std::vector<int> listed;
    for (int i = 0; i < p.num_applicants; ++i) {
      const auto& prefs = applicants[i].preferences;
      if (std::find(prefs.begin(), prefs.end(), j) != prefs.end()) {
        listed.push_back(i);
      }
    }
    const std::vector<Score> scores =
        CompanyScores(p, static_cast<int>(listed.size()), rng);
    for (size_t k = 0; k < listed.size(); ++k) {
      apps.push_back({listed[k], j, 0, scores[k]});
    }
  }

  std::vector<int> glower = p.global_lower;
  std::vector<int> gupper = p.global_upper;
  Instance inst(p.type_names, std::move(applicants), std::move(companies),
                std::move(apps), glower, gupper);
  const std::vector<Violation> problems = ValidateInstance(inst);
  if (HasErrors(problems)) {
    for (const Violation& v : problems) {
      if (v.severity == Severity::kError) {
        return absl::InvalidArgumentError(
            absl::StrCat("generated instance is invalid: ", FormatViolation(v)));
      }
    }
  }
  return inst;
}

}  // namespace quotamatch
