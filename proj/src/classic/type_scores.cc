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

#include "quotamatch/classic/type_scores.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "boost/graph/adjacency_list.hpp"
#include "boost/graph/successive_shortest_path_nonnegative_weights.hpp"
#include "quotamatch/core/checks.h"

namespace quotamatch {
namespace {

absl::Status Assumption(const std::string& what) {
  return absl::FailedPreconditionError(
      absl::StrCat("AssumptionViolated: ", what));
}

absl::Status Precondition(const std::string& what) {
  return absl::FailedPreconditionError(
      absl::StrCat("PreconditionViolated: ", what));
}

std::vector<Score> RawScores(const Instance& inst) {
  std::vector<Score> s(inst.num_applications());
  for (int a = 0; a < inst.num_applications(); ++a) {
    s[a] = inst.application(a).score;
  }
  return s;
}

std::vector<int> UpperSeats(const Instance& inst) {
  std::vector<int> seats(inst.num_companies());
  for (int j = 0; j < inst.num_companies(); ++j) {
    seats[j] = inst.company(j).upper;
  }
  return seats;
}

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS,
                                                boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<
        boost::edge_capacity_t, long,
        boost::property<
            boost::edge_residual_capacity_t, long,
            boost::property<boost::edge_reverse_t, FlowTraits::edge_descriptor,
                            boost::property<boost::edge_weight_t, long>>>>>;
using FlowEdge = FlowTraits::edge_descriptor;

FlowEdge AddFlowEdge(FlowGraph& g, int from, int to, long cap, long cost) {
  auto capacity = boost::get(boost::edge_capacity, g);
  auto reverse = boost::get(boost::edge_reverse, g);
  auto weight = boost::get(boost::edge_weight, g);
  const FlowEdge e = boost::add_edge(from, to, g).first;
  const FlowEdge r = boost::add_edge(to, from, g).first;
  capacity[e] = cap;
  capacity[r] = 0;
  weight[e] = cost;
  weight[r] = -cost;
  reverse[e] = r;
  reverse[r] = e;
  return e;
}

// Final seats per (company, type) for a complete matching: type lower quotas
// plus a transportation of the remaining applicants that first covers each
// company's unmet lower quota. Empty when no such seat plan exists.
std::vector<std::vector<int>> TargetSeats(const Instance& inst) {
  const int m = inst.num_companies();
  const int p = inst.num_types();
  const int source = 0;
  const int sink = 1 + p + m;
  FlowGraph g(sink + 1);
  long supply_total = 0;
  for (int k = 0; k < p; ++k) {
    long placed = 0;
    for (int j = 0; j < m; ++j) placed += inst.type_lower(j, k);
    const long supply = inst.type_population(k) - placed;
    supply_total += supply;
    AddFlowEdge(g, source, 1 + k, supply, 0);
  }
  std::vector<std::vector<FlowEdge>> seat_edges(m, std::vector<FlowEdge>(p));
  std::vector<FlowEdge> mandatory(m);
  std::vector<long> mandatory_cap(m, 0);
  for (int j = 0; j < m; ++j) {
    long typed = 0;
    for (int k = 0; k < p; ++k) {
      typed += inst.type_lower(j, k);
      const long room =
          std::min(inst.type_upper(j, k), inst.company(j).upper) -
          inst.type_lower(j, k);
      seat_edges[j][k] = AddFlowEdge(g, 1 + k, 1 + p + j, std::max(0L, room), 0);
    }
    const Company& c = inst.company(j);
    mandatory_cap[j] = std::max(0L, c.lower - typed);
    mandatory[j] = AddFlowEdge(g, 1 + p + j, sink, mandatory_cap[j], 0);
    AddFlowEdge(g, 1 + p + j, sink,
                std::max(0L, c.upper - std::max<long>(c.lower, typed)), 1);
  }
  boost::successive_shortest_path_nonnegative_weights(g, source, sink);
  auto capacity = boost::get(boost::edge_capacity, g);
  auto residual = boost::get(boost::edge_residual_capacity, g);
  auto flow = [&](FlowEdge e) { return capacity[e] - residual[e]; };
  long routed = 0;
  for (auto [it, end] = boost::out_edges(source, g); it != end; ++it) {
    if (capacity[*it] > 0) routed += flow(*it);
  }
  if (routed != supply_total) return {};
  for (int j = 0; j < m; ++j) {
    if (flow(mandatory[j]) != mandatory_cap[j]) return {};
  }
  std::vector<std::vector<int>> seats(m, std::vector<int>(p));
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < p; ++k) {
      seats[j][k] = inst.type_lower(j, k) + static_cast<int>(flow(seat_edges[j][k]));
    }
  }
  return seats;
}

int CountType(const Instance& inst, const Matching& m, int k) {
  int count = 0;
  for (int i = 0; i < inst.num_applicants(); ++i) {
    if (m.is_matched(i) && inst.type_of(i) == k) ++count;
  }
  return count;
}

}  // namespace

absl::StatusOr<Matching> CwtefmConstruct(const Instance& inst) {
  const int n = inst.num_applicants();
  const int m = inst.num_companies();
  const int p = inst.num_types();
  if (!inst.has_complete_lists()) {
    return Assumption("some applicant does not list every company");
  }
  for (int k = 0; k < p; ++k) {
    int sum = 0;
    for (int j = 0; j < m; ++j) sum += inst.type_lower(j, k);
    if (sum > inst.type_population(k)) {
      return Assumption(absl::StrCat("type lower quotas for ", inst.type_name(k),
                                     " sum to ", sum, " > ",
                                     inst.type_population(k), " applicants"));
    }
  }
  int needed = 0;
  for (int j = 0; j < m; ++j) {
    int sum = 0;
    for (int k = 0; k < p; ++k) sum += inst.type_lower(j, k);
    if (sum > inst.company(j).upper) {
      return Assumption(absl::StrCat("type lower quotas at ",
                                     inst.company(j).name, " sum to ", sum,
                                     " > upper quota ", inst.company(j).upper));
    }
    needed += std::max(sum, inst.company(j).lower);
  }
  if (inst.total_capacity() < n) {
    return Assumption(absl::StrCat("total capacity ", inst.total_capacity(),
                                   " < ", n, " applicants"));
  }
  if (needed > n) {
    return Assumption(absl::StrCat("lower quotas need ", needed, " > ", n,
                                   " applicants"));
  }
  for (int k = 0; k < p; ++k) {
    if (inst.global_lower(k) > inst.type_population(k) ||
        inst.global_upper(k) < inst.type_population(k)) {
      return Assumption(absl::StrCat("global quotas for ", inst.type_name(k),
                                     " exclude a complete matching"));
    }
  }
  const std::vector<std::vector<int>> target = TargetSeats(inst);
  if (target.empty() && m > 0) {
    return Assumption("type upper quotas leave no room for every applicant");
  }

  // Per-type deferred acceptance under artificial quotas, ties by index.
  std::vector<Score> keys(inst.num_applications());
  for (int a = 0; a < inst.num_applications(); ++a) {
    keys[a] = inst.application(a).score * n + (n - 1 - inst.application(a).applicant);
  }
  std::vector<std::vector<int>> seats(p, std::vector<int>(m));
  for (int k = 0; k < p; ++k) {
    for (int j = 0; j < m; ++j) seats[k][j] = inst.type_lower(j, k);
  }
  std::vector<Matching> per_type(p);
  std::vector<int> unmatched(p);
  auto run = [&](int k) {
    std::vector<char> active(n);
    for (int i = 0; i < n; ++i) active[i] = inst.type_of(i) == k;
    per_type[k] = DeferredAcceptanceWithKeys(inst, keys, seats[k], active);
    unmatched[k] = inst.type_population(k) - CountType(inst, per_type[k], k);
  };
  for (int k = 0; k < p; ++k) run(k);
  auto company_seats = [&](int j) {
    int total = 0;
    for (int k = 0; k < p; ++k) total += seats[k][j];
    return total;
  };

  // Raise artificial quotas until every company reaches its lower quota.
  for (int j = 0; j < m; ++j) {
    while (company_seats(j) < inst.company(j).lower) {
      int pick = -1;
      for (int k = 0; k < p && pick < 0; ++k) {
        if (unmatched[k] > 0 && seats[k][j] < target[j][k]) pick = k;
      }
      if (pick < 0) return absl::InternalError("no type can fill a lower quota");
      ++seats[pick][j];
      run(pick);
    }
  }
  // Then place the remaining applicants one seat at a time.
  while (true) {
    int k = 0;
    while (k < p && unmatched[k] == 0) ++k;
    if (k == p) break;
    int j = 0;
    while (j < m && seats[k][j] >= target[j][k]) ++j;
    if (j == m) return absl::InternalError("seat plan exhausted");
    ++seats[k][j];
    run(k);
  }

  Matching merged(n);
  for (int k = 0; k < p; ++k) {
    for (int i = 0; i < n; ++i) {
      if (inst.type_of(i) == k && per_type[k].is_matched(i)) {
        merged.Assign(i, per_type[k].company_of(i));
      }
    }
  }
  if (!IsComplete(inst, merged) ||
      HasErrors(CheckFeasible(inst, merged, QuotaMode::kWithGlobalTypes)) ||
      !WithinTypeEnvies(inst, merged).empty()) {
    return absl::InternalError("construction produced an invalid matching");
  }
  return merged;
}

ScoreAdjustment ScoreAdjustment::Uniform(const Instance& inst,
                                         std::span<const Score> per_type) {
  ScoreAdjustment adj;
  adj.bonus.assign(inst.num_companies(),
                   std::vector<Score>(per_type.begin(), per_type.end()));
  for (auto& row : adj.bonus) row.resize(inst.num_types(), 0);
  return adj;
}

bool ScoreAdjustment::is_uniform() const {
  return std::all_of(bonus.begin(), bonus.end(),
                     [&](const std::vector<Score>& row) { return row == bonus.front(); });
}

std::vector<Score> AdjustedScores(const Instance& inst,
                                  const ScoreAdjustment& adj) {
  std::vector<Score> s(inst.num_applications());
  for (int a = 0; a < inst.num_applications(); ++a) {
    const Application& app = inst.application(a);
    s[a] = app.score + adj.bonus[app.company][inst.type_of(app.applicant)];
  }
  return s;
}

ScoreAdjustment AdjustmentFromWtef(const Instance& inst, const Matching& m) {
  const int p = inst.num_types();
  ScoreAdjustment adj;
  adj.bonus.assign(inst.num_companies(), std::vector<Score>(p, 0));
  for (int j = 0; j < inst.num_companies(); ++j) {
    std::vector<Score> weakest(p, 0);
    std::vector<bool> present(p, false);
    for (int a : inst.applications_to(j)) {
      const Application& app = inst.application(a);
      if (m.company_of(app.applicant) != j) continue;
      const int k = inst.type_of(app.applicant);
      weakest[k] = present[k] ? std::min(weakest[k], app.score) : app.score;
      present[k] = true;
    }
    if (std::none_of(present.begin(), present.end(), [](bool b) { return b; })) {
      continue;
    }
    Score level = 0;
    for (int k = 0; k < p; ++k) {
      if (present[k]) level = std::max(level, weakest[k]);
    }
    for (int k = 0; k < p; ++k) {
      adj.bonus[j][k] = present[k] ? level - weakest[k] : level - inst.max_score();
    }
  }
  return adj;
}

bool VerifyStableWithAdjustment(const Instance& inst, const Matching& m,
                                const ScoreAdjustment& adj) {
  return BlockingPairsWithScores(inst, m, AdjustedScores(inst, adj),
                                 CapacityMode::kCurrentFill)
      .empty();
}

absl::StatusOr<EqualTypeScores> EqualTypeScoreSweep(const Instance& inst,
                                                    int type0_target) {
  if (inst.num_types() != 2) return Precondition("exactly two types required");
  if (!inst.has_complete_lists()) {
    return Precondition("some applicant does not list every company");
  }
  const int n0 = inst.type_population(0);
  const int n1 = inst.type_population(1);
  const int seats = inst.total_capacity();
  if (type0_target < 0 || type0_target > n0) {
    return Precondition(absl::StrCat("target ", type0_target, " outside [0, ",
                                     n0, "]"));
  }
  if (seats - type0_target < 0 || seats - type0_target > n1) {
    return Precondition(absl::StrCat("second type would need ",
                                     seats - type0_target, " of ", n1,
                                     " applicants"));
  }
  if (inst.num_companies() > inst.num_applicants()) {
    return Precondition("more companies than applicants");
  }
  const int targets[2] = {type0_target, seats - type0_target};
  for (int k = 0; k < 2; ++k) {
    const bool lower_set = inst.global_lower(k) != 0;
    const bool upper_set = inst.global_upper(k) != kUnbounded;
    if ((lower_set || upper_set) &&
        (inst.global_lower(k) != targets[k] ||
         inst.global_upper(k) != targets[k])) {
      return Precondition(absl::StrCat("global quotas for ", inst.type_name(k),
                                       " are not exactly ", targets[k]));
    }
  }

  std::vector<std::vector<int>> positions;
  for (int i = 0; i <= n0; ++i) {
    absl::StatusOr<std::vector<int>> pos =
        PriorityPositions(inst, TieBreakPolicy::FavorPrefix(i));
    if (!pos.ok()) return pos.status();
    positions.push_back(*std::move(pos));
  }
  const std::vector<Score> raw = RawScores(inst);
  const std::vector<int> upper = UpperSeats(inst);
  const Score range = 2 * inst.max_score() + 1;
  EqualTypeScores result;
  int previous = -1;
  std::vector<Score> shifted(raw.size());
  for (Score e = -range; e <= range; ++e) {
    for (int a = 0; a < inst.num_applications(); ++a) {
      shifted[a] = raw[a] + (inst.type_of(inst.application(a).applicant) == 0 ? e : 0);
    }
    for (int i = 0; i <= n0; ++i) {
      const Matching m = DeferredAcceptanceWithKeys(
          inst, StrictKeys(inst, shifted, positions[i]), upper);
      ++result.trials;
      const int count = CountType(inst, m, 0);
      if (previous >= 0 && std::abs(count - previous) > 1) {
        return absl::InternalError(absl::StrCat(
            "step bound broken at e=", e, ", prefix ", i, ": ", previous,
            " -> ", count, " type-0 applicants"));
      }
      previous = count;
      if (count == type0_target) {
        result.bonus = {e, 0};
        result.policy = TieBreakPolicy::FavorPrefix(i);
        result.matching = m;
        return result;
      }
    }
  }
  return absl::InternalError("sweep ended without reaching the target");
}

absl::StatusOr<EqualTypeScores> FindEqualTypeScores(
    const Instance& inst, const EqualScoreSearch& options) {
  if (!inst.has_complete_lists()) {
    return Precondition("some applicant does not list every company");
  }
  const int p = inst.num_types();
  auto accepted = [&](const Matching& m) {
    return !HasErrors(CheckFeasible(inst, m, QuotaMode::kWithGlobalTypes));
  };
  int64_t trials = 0;
  if (p == 2 && inst.global_lower(0) == inst.global_upper(0)) {
    absl::StatusOr<EqualTypeScores> swept =
        EqualTypeScoreSweep(inst, inst.global_lower(0));
    if (swept.ok()) {
      trials += swept->trials;
      if (accepted(swept->matching)) return swept;
    }
  }

  // Type priorities in every order, then seeded random priority orders.
  std::vector<TieBreakPolicy> policies;
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    policies.push_back(TieBreakPolicy::FavorType(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::mt19937_64 rng(options.seed);
  std::vector<int> shuffled(inst.num_applicants());
  std::iota(shuffled.begin(), shuffled.end(), 0);
  for (int r = 0; r < options.random_orders; ++r) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    policies.push_back(TieBreakPolicy::ExplicitOrder(shuffled));
  }
  std::vector<std::vector<int>> positions;
  for (const TieBreakPolicy& policy : policies) {
    absl::StatusOr<std::vector<int>> pos = PriorityPositions(inst, policy);
    if (!pos.ok()) return pos.status();
    positions.push_back(*std::move(pos));
  }
  const std::vector<Score> raw = RawScores(inst);
  const std::vector<int> upper = UpperSeats(inst);
  const Score range = 2 * inst.max_score() + 1;
  const int dims = p - 1;

  std::vector<Score> bonus(p, 0);
  std::vector<Score> shifted(raw.size());
  std::optional<EqualTypeScores> found;
  bool exhausted = false;
  // Every bonus vector with |e_0| + ... + |e_{dims-1}| == budget, ascending.
  std::function<void(int, Score)> visit = [&](int d, Score left) {
    if (found || exhausted) return;
    if (d == dims) {
      if (left != 0) return;
      for (int a = 0; a < inst.num_applications(); ++a) {
        shifted[a] = raw[a] + bonus[inst.type_of(inst.application(a).applicant)];
      }
      for (size_t o = 0; o < policies.size(); ++o) {
        if (trials >= options.max_trials) {
          exhausted = true;
          return;
        }
        ++trials;
        Matching m = DeferredAcceptanceWithKeys(
            inst, StrictKeys(inst, shifted, positions[o]), upper);
        if (accepted(m)) {
          found = EqualTypeScores{bonus, policies[o], std::move(m), trials};
          return;
        }
      }
      return;
    }
    const Score reach = std::min(range, left);
    for (Score e = -reach; e <= reach; ++e) {
      if (d == dims - 1 && std::abs(e) != left) continue;
      bonus[d] = e;
      visit(d + 1, left - std::abs(e));
      if (found || exhausted) return;
    }
    bonus[d] = 0;
  };
  for (Score budget = 0; budget <= dims * range && !found && !exhausted;
       ++budget) {
    visit(0, budget);
  }
  if (found) return *std::move(found);
  if (exhausted) {
    return absl::ResourceExhaustedError(
        absl::StrCat("no equal type-specific scores within ", options.max_trials,
                     " trials"));
  }
  return absl::NotFoundError(
      "no equal type-specific scores meet the declared quotas");
}

}  // namespace quotamatch
