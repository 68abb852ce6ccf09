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

#include "quotamatch/classic/deferred_acceptance.h"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace quotamatch {

std::string DescribePolicy(const TieBreakPolicy& policy) {
  switch (policy.kind) {
    case TieBreakPolicy::Kind::kByIndex:
      return "by-index";
    case TieBreakPolicy::Kind::kFavorType:
      return absl::StrCat("favor-type(", absl::StrJoin(policy.type_order, ","),
                          ")");
    case TieBreakPolicy::Kind::kFavorPrefix:
      return absl::StrCat("favor-prefix(", policy.prefix, ")");
    case TieBreakPolicy::Kind::kExplicitOrder:
      return absl::StrCat("order(", absl::StrJoin(policy.order, ","), ")");
  }
  return "?";
}

absl::StatusOr<std::vector<int>> PriorityPositions(
    const Instance& inst, const TieBreakPolicy& policy) {
  const int n = inst.num_applicants();
  std::vector<int> order;
  order.reserve(n);
  switch (policy.kind) {
    case TieBreakPolicy::Kind::kByIndex:
      for (int i = 0; i < n; ++i) order.push_back(i);
      break;
    case TieBreakPolicy::Kind::kFavorType: {
      std::vector<int> rank(inst.num_types(), inst.num_types());
      for (size_t r = 0; r < policy.type_order.size(); ++r) {
        const int k = policy.type_order[r];
        if (k < 0 || k >= inst.num_types()) {
          return absl::InvalidArgumentError(absl::StrCat("unknown type ", k));
        }
        rank[k] = std::min(rank[k], static_cast<int>(r));
      }
      for (int i = 0; i < n; ++i) order.push_back(i);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return rank[inst.type_of(a)] < rank[inst.type_of(b)];
      });
      break;
    }
    case TieBreakPolicy::Kind::kFavorPrefix: {
      if (inst.num_types() != 2) {
        return absl::InvalidArgumentError(
            "prefix tie-breaking needs exactly two types");
      }
      if (policy.prefix < 0 || policy.prefix > inst.type_population(0)) {
        return absl::InvalidArgumentError(
            absl::StrCat("prefix ", policy.prefix, " outside [0, ",
                         inst.type_population(0), "]"));
      }
      std::vector<int> first;
      for (int i = 0; i < n; ++i) {
        if (inst.type_of(i) == 0) first.push_back(i);
      }
      order.assign(first.begin(), first.begin() + policy.prefix);
      for (int i = 0; i < n; ++i) {
        if (inst.type_of(i) == 1) order.push_back(i);
      }
      order.insert(order.end(), first.begin() + policy.prefix, first.end());
      break;
    }
    case TieBreakPolicy::Kind::kExplicitOrder: {
      order = policy.order;
      std::vector<int> sorted = order;
      std::sort(sorted.begin(), sorted.end());
      bool permutation = static_cast<int>(sorted.size()) == n;
      for (int i = 0; permutation && i < n; ++i) permutation = sorted[i] == i;
      if (!permutation) {
        return absl::InvalidArgumentError(
            "explicit order must list every applicant once");
      }
      break;
    }
  }
  std::vector<int> position(n);
  for (int r = 0; r < n; ++r) position[order[r]] = r;
  return position;
}

std::vector<Score> StrictKeys(const Instance& inst,
                              std::span<const Score> scores,
                              std::span<const int> positions) {
  const Score n = inst.num_applicants();
  std::vector<Score> keys(inst.num_applications());
  for (int a = 0; a < inst.num_applications(); ++a) {
    const int i = inst.application(a).applicant;
    keys[a] = scores[a] * n + (n - 1 - positions[i]);
  }
  return keys;
}

absl::StatusOr<Instance> BreakTies(const Instance& inst,
                                   const TieBreakPolicy& policy) {
  absl::StatusOr<std::vector<int>> positions = PriorityPositions(inst, policy);
  if (!positions.ok()) return positions.status();
  std::vector<Score> scores(inst.num_applications());
  for (int a = 0; a < inst.num_applications(); ++a) {
    scores[a] = inst.application(a).score;
  }
  return inst.WithScores(StrictKeys(inst, scores, *positions));
}

bool HasStrictScores(const Instance& inst) {
  for (int j = 0; j < inst.num_companies(); ++j) {
    std::set<Score> seen;
    for (int a : inst.applications_to(j)) {
      if (!seen.insert(inst.application(a).score).second) return false;
    }
  }
  return true;
}

Matching DeferredAcceptanceWithKeys(const Instance& inst,
                                    std::span<const Score> keys,
                                    std::span<const int> seats,
                                    std::span<const char> active) {
  const int n = inst.num_applicants();
  Matching m(n);
  // Current assignees of each company, weakest first.
  std::vector<std::set<std::pair<Score, int>>> held(inst.num_companies());
  std::vector<int> next(n, 0);  // next position in the preference list
  std::deque<int> free;
  for (int i = 0; i < n; ++i) {
    if (active.empty() || active[i]) free.push_back(i);
  }
  while (!free.empty()) {
    const int i = free.front();
    free.pop_front();
    const std::span<const int> list = inst.applications_of(i);
    while (next[i] < static_cast<int>(list.size())) {
      const int a = list[next[i]++];
      const int j = inst.application(a).company;
      if (seats[j] <= 0) continue;
      auto& h = held[j];
      if (static_cast<int>(h.size()) < seats[j]) {
        h.insert({keys[a], i});
        m.Assign(i, j);
        break;
      }
      const auto weakest = h.begin();
      if (weakest->first < keys[a]) {
        const int out = weakest->second;
        h.erase(weakest);
        m.Unassign(out);
        free.push_back(out);
        h.insert({keys[a], i});
        m.Assign(i, j);
        break;
      }
    }
  }
  return m;
}

absl::StatusOr<Matching> DeferredAcceptance(const Instance& strict_inst) {
  if (!HasStrictScores(strict_inst)) {
    return absl::FailedPreconditionError(
        "TiesPresent: some company gives equal scores; break ties first");
  }
  std::vector<Score> keys(strict_inst.num_applications());
  for (int a = 0; a < strict_inst.num_applications(); ++a) {
    keys[a] = strict_inst.application(a).score;
  }
  std::vector<int> seats(strict_inst.num_companies());
  for (int j = 0; j < strict_inst.num_companies(); ++j) {
    seats[j] = strict_inst.company(j).upper;
  }
  return DeferredAcceptanceWithKeys(strict_inst, keys, seats);
}

absl::StatusOr<HrlResult> HrlFeasibilityCheck(const Instance& strict_inst) {
  absl::StatusOr<Matching> m = DeferredAcceptance(strict_inst);
  if (!m.ok()) return m.status();
  HrlResult result;
  result.matching = *std::move(m);
  std::vector<int> fill(strict_inst.num_companies(), 0);
  for (int i = 0; i < strict_inst.num_applicants(); ++i) {
    if (result.matching.is_matched(i)) ++fill[result.matching.company_of(i)];
  }
  for (int j = 0; j < strict_inst.num_companies(); ++j) {
    if (fill[j] < strict_inst.company(j).lower) result.deficient.push_back(j);
  }
  result.exists = result.deficient.empty();
  return result;
}

}  // namespace quotamatch
