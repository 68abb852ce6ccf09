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

#include "quotamatch/core/checks.h"

#include <algorithm>
#include <limits>
#include <set>

#include "absl/strings/str_cat.h"

namespace quotamatch {

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kQuotaOrder: return "QuotaOrder";
    case ViolationKind::kTypeQuotaOrder: return "TypeQuotaOrder";
    case ViolationKind::kTypeQuotaAboveUpper: return "TypeQuotaAboveUpper";
    case ViolationKind::kGlobalQuotaOrder: return "GlobalQuotaOrder";
    case ViolationKind::kTypeTableSize: return "TypeTableSize";
    case ViolationKind::kUnknownType: return "UnknownType";
    case ViolationKind::kDanglingPreference: return "DanglingPreference";
    case ViolationKind::kDuplicatePreference: return "DuplicatePreference";
    case ViolationKind::kMissingApplication: return "MissingApplication";
    case ViolationKind::kUnlistedApplication: return "UnlistedApplication";
    case ViolationKind::kDuplicateApplication: return "DuplicateApplication";
    case ViolationKind::kNegativeScore: return "NegativeScore";
    case ViolationKind::kEmptyPreferences: return "EmptyPreferences";
    case ViolationKind::kUnknownAssignment: return "UnknownAssignment";
    case ViolationKind::kUpperQuota: return "UpperQuota";
    case ViolationKind::kLowerQuota: return "LowerQuota";
    case ViolationKind::kTypeUpperQuota: return "TypeUpperQuota";
    case ViolationKind::kTypeLowerQuota: return "TypeLowerQuota";
    case ViolationKind::kGlobalTypeUpper: return "GlobalTypeUpper";
    case ViolationKind::kGlobalTypeLower: return "GlobalTypeLower";
  }
  return "Unknown";
}

std::string FormatViolation(const Violation& v) {
  return absl::StrCat(v.severity == Severity::kWarning ? "warning: " : "error: ",
                      std::string(ViolationKindName(v.kind)), "(", v.subject,
                      ")",
                      v.detail.empty() ? "" : ": ", v.detail);
}

bool HasErrors(std::span<const Violation> violations) {
  return std::any_of(violations.begin(), violations.end(), [](const auto& v) {
    return v.severity == Severity::kError;
  });
}

namespace {

std::string ApplicantLabel(const Instance& inst, int i) {
  if (i >= 0 && i < inst.num_applicants() && !inst.applicant(i).name.empty()) {
    return inst.applicant(i).name;
  }
  return absl::StrCat("#a", i);
}

std::string CompanyLabel(const Instance& inst, int j) {
  if (j >= 0 && j < inst.num_companies() && !inst.company(j).name.empty()) {
    return inst.company(j).name;
  }
  return absl::StrCat("#c", j);
}

}  // namespace

std::vector<Violation> ValidateInstance(const Instance& inst) {
  std::vector<Violation> out;
  auto add = [&out](ViolationKind kind, std::string subject, std::string detail,
                    Severity severity = Severity::kError) {
    out.push_back({kind, severity, std::move(subject), std::move(detail)});
  };
  const int n = inst.num_applicants();
  const int m = inst.num_companies();
  const int p = inst.num_types();

  for (int j = 0; j < m; ++j) {
    const Company& c = inst.company(j);
    const std::string label = CompanyLabel(inst, j);
    if (c.lower < 0 || c.upper < 0 || c.lower > c.upper) {
      add(ViolationKind::kQuotaOrder, label,
          absl::StrCat("lower ", c.lower, " upper ", c.upper));
    }
    if (static_cast<int>(c.type_lower.size()) > p ||
        static_cast<int>(c.type_upper.size()) > p) {
      add(ViolationKind::kTypeTableSize, label, "more type quotas than types");
    }
    for (int k = 0; k < p; ++k) {
      const int lo = inst.type_lower(j, k);
      const int hi = inst.type_upper(j, k);
      if (lo < 0 || lo > hi) {
        add(ViolationKind::kTypeQuotaOrder,
            absl::StrCat(label, "/", inst.type_name(k)),
            absl::StrCat("lower ", lo, " upper ", hi));
      }
      if (hi > c.upper) {
        add(ViolationKind::kTypeQuotaAboveUpper,
            absl::StrCat(label, "/", inst.type_name(k)),
            absl::StrCat("type upper ", hi, " exceeds upper ", c.upper));
      }
    }
  }
  for (int k = 0; k < p; ++k) {
    if (inst.global_lower(k) < 0 || inst.global_lower(k) > inst.global_upper(k)) {
      add(ViolationKind::kGlobalQuotaOrder, inst.type_name(k),
          absl::StrCat("lower ", inst.global_lower(k), " upper ",
                       inst.global_upper(k)));
    }
  }

  for (int i = 0; i < n; ++i) {
    const Applicant& a = inst.applicant(i);
    const std::string label = ApplicantLabel(inst, i);
    if (a.type < 0 || a.type >= p) {
      add(ViolationKind::kUnknownType, label, absl::StrCat("type ", a.type));
    }
    if (a.preferences.empty()) {
      add(ViolationKind::kEmptyPreferences, label,
          "applicant lists no company and is exempt from completeness",
          Severity::kWarning);
    }
    std::set<int> seen;
    for (int j : a.preferences) {
      if (j < 0 || j >= m) {
        add(ViolationKind::kDanglingPreference, label,
            absl::StrCat("company ", CompanyLabel(inst, j), " does not exist"));
        continue;
      }
      if (!seen.insert(j).second) {
        add(ViolationKind::kDuplicatePreference,
            absl::StrCat(label, "/", CompanyLabel(inst, j)), "listed twice");
        continue;
      }
      if (!inst.has_application(i, j)) {
        add(ViolationKind::kMissingApplication,
            absl::StrCat(label, "/", CompanyLabel(inst, j)), "no score given");
      }
    }
  }

  std::set<std::pair<int, int>> pairs;
  for (const Application& app : inst.applications()) {
    const std::string label = absl::StrCat(ApplicantLabel(inst, app.applicant),
                                           "/", CompanyLabel(inst, app.company));
    if (!pairs.insert({app.applicant, app.company}).second) {
      add(ViolationKind::kDuplicateApplication, label, "scored twice");
      continue;
    }
    if (app.rank == 0) {
      add(ViolationKind::kUnlistedApplication, label,
          "score given for a company the applicant does not list");
    }
    if (app.score < 0) {
      add(ViolationKind::kNegativeScore, label, "score must be non-negative");
    }
  }
  return out;
}

std::vector<Violation> CheckFeasible(const Instance& inst, const Matching& m,
                                     QuotaMode mode) {
  std::vector<Violation> out;
  const int nc = inst.num_companies();
  const int p = inst.num_types();
  std::vector<int> fill(nc, 0);
  std::vector<std::vector<int>> profile(nc, std::vector<int>(p, 0));
  std::vector<int> type_total(p, 0);
  for (int i = 0; i < m.num_applicants() && i < inst.num_applicants(); ++i) {
    const int j = m.company_of(i);
    if (j == Matching::kUnmatched) continue;
    if (!inst.has_application(i, j)) {
      out.push_back({ViolationKind::kUnknownAssignment, Severity::kError,
                     absl::StrCat(ApplicantLabel(inst, i), "/",
                                  CompanyLabel(inst, j)),
                     "pair is not an application"});
      continue;
    }
    ++fill[j];
    ++profile[j][inst.type_of(i)];
    ++type_total[inst.type_of(i)];
  }
  if (m.num_applicants() != inst.num_applicants()) {
    out.push_back({ViolationKind::kUnknownAssignment, Severity::kError,
                   "matching", "applicant count differs from instance"});
  }
  for (int j = 0; j < nc; ++j) {
    const Company& c = inst.company(j);
    const std::string label = CompanyLabel(inst, j);
    if (fill[j] > c.upper) {
      out.push_back({ViolationKind::kUpperQuota, Severity::kError, label,
                     absl::StrCat(fill[j], " > ", c.upper)});
    }
    if (mode >= QuotaMode::kWithLower && fill[j] < c.lower) {
      out.push_back({ViolationKind::kLowerQuota, Severity::kError, label,
                     absl::StrCat(fill[j], " < ", c.lower)});
    }
    if (mode >= QuotaMode::kWithTypes) {
      for (int k = 0; k < p; ++k) {
        const std::string sub = absl::StrCat(label, "/", inst.type_name(k));
        if (profile[j][k] > inst.type_upper(j, k)) {
          out.push_back({ViolationKind::kTypeUpperQuota, Severity::kError, sub,
                         absl::StrCat(profile[j][k], " > ",
                                      inst.type_upper(j, k))});
        }
        if (profile[j][k] < inst.type_lower(j, k)) {
          out.push_back({ViolationKind::kTypeLowerQuota, Severity::kError, sub,
                         absl::StrCat(profile[j][k], " < ",
                                      inst.type_lower(j, k))});
        }
      }
    }
  }
  if (mode >= QuotaMode::kWithGlobalTypes) {
    for (int k = 0; k < p; ++k) {
      if (type_total[k] > inst.global_upper(k)) {
        out.push_back({ViolationKind::kGlobalTypeUpper, Severity::kError,
                       inst.type_name(k),
                       absl::StrCat(type_total[k], " > ", inst.global_upper(k))});
      }
      if (type_total[k] < inst.global_lower(k)) {
        out.push_back({ViolationKind::kGlobalTypeLower, Severity::kError,
                       inst.type_name(k),
                       absl::StrCat(type_total[k], " < ", inst.global_lower(k))});
      }
    }
  }
  return out;
}

bool IsComplete(const Instance& inst, const Matching& m) {
  for (int i = 0; i < inst.num_applicants(); ++i) {
    if (!inst.applications_of(i).empty() && !m.is_matched(i)) return false;
  }
  return true;
}

bool HoldsAtLeast(const Instance& inst, const Matching& m, int i, int j) {
  const int held = m.company_of(i);
  if (held == Matching::kUnmatched) return false;
  if (held == j) return true;
  const int held_rank = inst.rank(i, held);
  return held_rank != 0 && held_rank <= inst.rank(i, j);
}

std::vector<Pair> BlockingPairsWithScores(const Instance& inst,
                                          const Matching& m,
                                          std::span<const Score> scores,
                                          CapacityMode capacity) {
  const int nc = inst.num_companies();
  std::vector<int> fill(nc, 0);
  std::vector<Score> weakest(nc, std::numeric_limits<Score>::max());
  for (int i = 0; i < inst.num_applicants(); ++i) {
    const int j = m.company_of(i);
    if (j == Matching::kUnmatched) continue;
    const int a = inst.application_index(i, j);
    if (a == kNoApplication) continue;
    ++fill[j];
    weakest[j] = std::min(weakest[j], scores[a]);
  }
  std::vector<Pair> out;
  for (int a = 0; a < inst.num_applications(); ++a) {
    const Application& app = inst.application(a);
    if (app.rank == 0) continue;
    if (inst.application_index(app.applicant, app.company) != a) continue;
    const int i = app.applicant;
    const int j = app.company;
    if (HoldsAtLeast(inst, m, i, j)) continue;
    const int cap =
        capacity == CapacityMode::kUpperQuota ? inst.company(j).upper : fill[j];
    const bool free_seat = fill[j] < cap;
    const bool weaker_assignee = fill[j] > 0 && weakest[j] < scores[a];
    if (free_seat || weaker_assignee) out.emplace_back(i, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pair> BlockingPairs(const Instance& inst, const Matching& m,
                                bool /*ties*/) {
  std::vector<Score> scores(inst.num_applications());
  for (int a = 0; a < inst.num_applications(); ++a) {
    scores[a] = inst.application(a).score;
  }
  return BlockingPairsWithScores(inst, m, scores, CapacityMode::kUpperQuota);
}

std::vector<Pair> OpenSlotBlockings(const Instance& inst, const Matching& m) {
  const std::vector<int> fill = CompanyFill(inst, m);
  std::vector<Pair> out;
  for (const Pair& p : BlockingPairs(inst, m)) {
    if (fill[p.second] < inst.company(p.second).upper) out.push_back(p);
  }
  return out;
}

std::vector<Envy> JustifiedEnvies(const Instance& inst, const Matching& m) {
  std::vector<Envy> out;
  for (int h = 0; h < inst.num_applicants(); ++h) {
    const int j = m.company_of(h);
    if (j == Matching::kUnmatched || !inst.has_application(h, j)) continue;
    const Score held = inst.score(h, j);
    for (int a : inst.applications_to(j)) {
      const Application& app = inst.application(a);
      const int i = app.applicant;
      if (i == h || app.score <= held) continue;
      if (HoldsAtLeast(inst, m, i, j)) continue;
      out.push_back({i, h, j, app.score - held});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Envy> WithinTypeEnvies(const Instance& inst, const Matching& m) {
  std::vector<Envy> out;
  for (const Envy& e : JustifiedEnvies(inst, m)) {
    if (inst.type_of(e.envier) == inst.type_of(e.envied)) out.push_back(e);
  }
  return out;
}

std::vector<Envy> CrossTypeEnvies(const Instance& inst, const Matching& m) {
  std::vector<Envy> out;
  for (const Envy& e : JustifiedEnvies(inst, m)) {
    if (inst.type_of(e.envier) != inst.type_of(e.envied)) out.push_back(e);
  }
  return out;
}

int64_t TotalRank(const Instance& inst, const Matching& m) {
  int64_t total = 0;
  for (int i = 0; i < inst.num_applicants(); ++i) {
    if (m.is_matched(i)) total += inst.rank(i, m.company_of(i));
  }
  return total;
}

std::vector<int> CompanyFill(const Instance& inst, const Matching& m) {
  std::vector<int> fill(inst.num_companies(), 0);
  for (int i = 0; i < inst.num_applicants(); ++i) {
    const int j = m.company_of(i);
    if (j >= 0 && j < inst.num_companies()) ++fill[j];
  }
  return fill;
}

std::vector<std::vector<int>> TypeProfile(const Instance& inst,
                                          const Matching& m) {
  std::vector<std::vector<int>> profile(inst.num_companies(),
                                        std::vector<int>(inst.num_types(), 0));
  for (int i = 0; i < inst.num_applicants(); ++i) {
    const int j = m.company_of(i);
    if (j >= 0 && j < inst.num_companies()) ++profile[j][inst.type_of(i)];
  }
  return profile;
}

}  // namespace quotamatch
