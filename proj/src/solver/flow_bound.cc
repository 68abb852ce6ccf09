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

#include "flow_bound.h"

#include <algorithm>
#include <cstdlib>

namespace quotamatch::internal {
namespace {

int64_t FloorDiv(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t CeilDiv(int64_t a, int64_t b) { return -FloorDiv(-a, b); }

bool UnitRow(const LinearModel& model, const LinearConstraint& row) {
  return !row.terms.empty() &&
         std::all_of(row.terms.begin(), row.terms.end(), [&](const Term& t) {
           return t.coef == 1 && model.var(t.var).upper <= 1;
         });
}

}  // namespace

FlowBound::FlowBound(const LinearModel& model, const Objective* objective) {
  const int n = model.num_vars();
  std::vector<int> group_of(n, -1);
  for (const LinearConstraint& row : model.constraints()) {
    if (row.tag != RowTag::kEq1 || row.rhs != 1 ||
        row.sense == Sense::kGreaterEqual || !UnitRow(model, row)) {
      continue;
    }
    if (std::any_of(row.terms.begin(), row.terms.end(),
                    [&](const Term& t) { return group_of[t.var] >= 0; })) {
      continue;
    }
    for (const Term& t : row.terms) group_of[t.var] = num_groups_;
    group_vars_.emplace_back();
    for (const Term& t : row.terms) group_vars_.back().push_back(t.var);
    group_exact_.push_back(row.sense == Sense::kEqual);
    ++num_groups_;
  }
  if (num_groups_ == 0) return;
  cost_.assign(n, 0);
  costs_ = objective != nullptr && !objective->terms.empty() &&
           std::all_of(objective->terms.begin(), objective->terms.end(),
                       [&](const Term& t) { return group_of[t.var] >= 0; });
  if (costs_) {
    for (const Term& t : objective->terms) cost_[t.var] += t.coef;
    constant_ = objective->constant;
  }

  var_company_.assign(n, -1);
  int grouped = 0;
  for (int v = 0; v < n; ++v) grouped += group_of[v] >= 0 ? 1 : 0;
  for (const LinearConstraint& row : model.constraints()) {
    if (row.tag == RowTag::kEq2 && row.sense == Sense::kLessEqual &&
        UnitRow(model, row) &&
        std::all_of(row.terms.begin(), row.terms.end(), [&](const Term& t) {
          return group_of[t.var] >= 0 && var_company_[t.var] < 0;
        })) {
      for (const Term& t : row.terms) var_company_[t.var] = num_companies_;
      company_cap_.push_back(row.rhs);
      company_lower_.push_back(0);
      ++num_companies_;
      continue;
    }
    // Rows fixing the total number of matches, such as the pinned value of
    // an unmatched-count objective.
    if (static_cast<int>(row.terms.size()) != grouped) continue;
    const int64_t a = row.terms.front().coef;
    if (a == 0 || !std::all_of(row.terms.begin(), row.terms.end(),
                               [&](const Term& t) {
                                 return t.coef == a && group_of[t.var] >= 0;
                               })) {
      continue;
    }
    const bool le = row.sense != Sense::kGreaterEqual;
    const bool ge = row.sense != Sense::kLessEqual;
    // a * S <= rhs and/or a * S >= rhs.
    if (le) {
      if (a > 0) max_total_ = std::min(max_total_, FloorDiv(row.rhs, a));
      else min_total_ = std::max(min_total_, CeilDiv(row.rhs, a));
    }
    if (ge) {
      if (a > 0) min_total_ = std::max(min_total_, CeilDiv(row.rhs, a));
      else max_total_ = std::min(max_total_, FloorDiv(row.rhs, a));
    }
  }
  // Lower quotas over exactly the members of one capacity row.
  for (const LinearConstraint& row : model.constraints()) {
    if (row.tag != RowTag::kEq5 || row.sense != Sense::kGreaterEqual ||
        !UnitRow(model, row)) {
      continue;
    }
    const int c = var_company_[row.terms.front().var];
    if (c < 0) continue;
    int members = 0;
    for (int v = 0; v < n; ++v) members += var_company_[v] == c ? 1 : 0;
    if (members == static_cast<int>(row.terms.size()) &&
        std::all_of(row.terms.begin(), row.terms.end(),
                    [&](const Term& t) { return var_company_[t.var] == c; })) {
      company_lower_[c] = std::max(company_lower_[c], row.rhs);
    }
  }
  active_ = true;
}

void FlowBound::AddArc(int from, int to, int cap, int64_t cost) {
  out_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, cap, cost});
  out_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0, -cost});
}

bool FlowBound::ShortestPath() {
  const int num_nodes = static_cast<int>(out_.size());
  const int sink = num_nodes - 1;
  dist_.assign(num_nodes, kInfeasible);
  parent_arc_.assign(num_nodes, -1);
  in_queue_.assign(num_nodes, false);
  queue_.clear();
  dist_[0] = 0;
  queue_.push_back(0);
  in_queue_[0] = true;
  for (size_t head = 0; head < queue_.size(); ++head) {
    const int u = queue_[head];
    in_queue_[u] = false;
    for (int a : out_[u]) {
      const Arc& arc = arcs_[a];
      if (arc.cap <= 0) continue;
      const int64_t d = dist_[u] + arc.cost;
      if (d < dist_[arc.to]) {
        dist_[arc.to] = d;
        parent_arc_[arc.to] = a;
        if (!in_queue_[arc.to]) {
          in_queue_[arc.to] = true;
          queue_.push_back(arc.to);
        }
      }
    }
  }
  return dist_[sink] < kInfeasible;
}

int64_t FlowBound::Compute(const std::vector<int64_t>& lo,
                           const std::vector<int64_t>& hi) {
  int64_t base = constant_;
  int64_t fixed = 0;
  std::vector<int64_t> cap = company_cap_;
  std::vector<int64_t> low = company_lower_;
  std::vector<int> open_groups;
  for (int g = 0; g < num_groups_; ++g) {
    bool done = false;
    for (int v : group_vars_[g]) {
      if (lo[v] == 1) {
        base += cost_[v];
        ++fixed;
        if (var_company_[v] >= 0) {
          if (--cap[var_company_[v]] < 0) return kInfeasible;
          --low[var_company_[v]];
        }
        done = true;
        break;
      }
    }
    if (!done) open_groups.push_back(g);
  }
  const int64_t need = std::max<int64_t>(0, min_total_ - fixed);
  const int64_t room = max_total_ - fixed;
  if (room < 0) return kInfeasible;

  // Nodes: source 0, open groups, companies, sink.
  const int num_open = static_cast<int>(open_groups.size());
  const int first_company = 1 + num_open;
  const int sink = first_company + num_companies_;
  arcs_.clear();
  out_.assign(sink + 1, {});
  // Bonuses that make every shortest path first serve the exact groups and
  // the unmet lower quotas; each is larger than any total of real costs.
  int64_t big = 1;
  for (int g : open_groups) {
    for (int v : group_vars_[g]) big += std::abs(cost_[v]);
  }
  const int64_t huge = big * (2 * num_open + 2);
  int must = 0;
  for (int k = 0; k < num_open; ++k) {
    const int g = open_groups[k];
    bool any = false;
    for (int v : group_vars_[g]) {
      if (hi[v] == 0) continue;
      any = true;
      const int c = var_company_[v];
      AddArc(1 + k, c >= 0 ? first_company + c : sink, 1, cost_[v]);
    }
    if (group_exact_[g]) {
      if (!any) return kInfeasible;
      ++must;
    }
    if (any) AddArc(0, 1 + k, 1, group_exact_[g] ? -big : 0);
  }
  int64_t lower_needed = 0;
  std::vector<int> lower_arcs;
  for (int c = 0; c < num_companies_; ++c) {
    const int64_t seats = std::min<int64_t>(cap[c], num_open);
    const int64_t low_seats = std::clamp<int64_t>(low[c], 0, seats);
    if (low[c] > seats) return kInfeasible;
    lower_needed += low_seats;
    if (low_seats > 0) {
      lower_arcs.push_back(static_cast<int>(arcs_.size()));
      AddArc(first_company + c, sink, static_cast<int>(low_seats), -huge);
    }
    if (seats > low_seats) {
      AddArc(first_company + c, sink, static_cast<int>(seats - low_seats), 0);
    }
  }

  // Successive shortest paths; the cost of the best k-unit flow is convex in
  // k, so the search stops at the first non-negative path once every bonus
  // arc that must carry flow does.
  int64_t flow = 0;
  int64_t cost = 0;
  int routed_exact = 0;
  int64_t routed_lower = 0;
  int64_t best = kInfeasible;
  const int64_t floor_flow = std::max<int64_t>(need, must);
  auto complete = [&] {
    return flow >= floor_flow && routed_exact == must &&
           routed_lower == lower_needed;
  };
  while (true) {
    if (complete()) best = std::min(best, cost + must * big + lower_needed * huge);
    if (flow >= room || !ShortestPath()) break;
    const int64_t step = dist_[sink];
    if (step >= 0 && complete()) break;
    int node = sink;
    while (node != 0) {
      const int a = parent_arc_[node];
      arcs_[a].cap -= 1;
      arcs_[a ^ 1].cap += 1;
      node = arcs_[a ^ 1].to;
      if (node == 0 && arcs_[a].cost == -big) ++routed_exact;
    }
    cost += step;
    ++flow;
    routed_lower = 0;
    for (int a : lower_arcs) routed_lower += arcs_[a ^ 1].cap;
  }
  if (best >= kInfeasible) return kInfeasible;
  if (!costs_) return kNoBound;
  return base + best;
}

}  // namespace quotamatch::internal
