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

#include "quotamatch/solver/solver.h"

#include <algorithm>
#include <chrono>
#include <limits>
#include <optional>
#include <utility>

#include "flow_bound.h"

namespace quotamatch {

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "Optimal";
    case SolveStatus::kInfeasible: return "Infeasible";
    case SolveStatus::kLimitReached: return "LimitReached";
  }
  return "?";
}

namespace {

constexpr int64_t kNoCutoff = std::numeric_limits<int64_t>::max() / 4;

// All rows are stored as sum(a_v * x_v) <= rhs. The minimum activity of each
// row under the current bounds is kept up to date on every bound change.
class BranchAndBound {
 public:
  BranchAndBound(const LinearModel& model, const Objective* objective,
                 const SolverConfig& config);

  SolveOutcome Run();

 private:
  struct TrailEntry {
    int var;
    int64_t lo;
    int64_t hi;
  };

  int AddRow(const std::vector<Term>& terms, int64_t sign, int64_t rhs);
  void Finalize();
  bool Tighten(int v, int64_t lo, int64_t hi);
  bool Propagate();
  void ClearQueue();
  void Enqueue(int r);
  void Undo(size_t mark);
  int64_t Bound() const;
  int Pick(int start) const;
  void Dfs(int start);
  void RecordLeaf();
  bool OutOfBudget();

  const LinearModel& model_;
  const Objective* objective_;
  SolverConfig config_;
  int num_vars_ = 0;

  std::vector<int64_t> lo_, hi_;
  std::vector<bool> prefer_one_;

  std::vector<int> row_start_{0};
  std::vector<int> row_var_;
  std::vector<int64_t> row_coef_;
  std::vector<int64_t> rhs_;
  std::vector<int64_t> min_activity_;
  std::vector<int64_t> row_max_swing_;  // max |a| * (initial range)
  std::vector<int> col_start_;
  std::vector<int> col_row_;
  std::vector<int64_t> col_coef_;
  int objective_row_ = -1;
  std::optional<internal::FlowBound> flow_bound_;

  // Groups of binaries sharing a "sum <= 1" or "sum = 1" row with unit
  // coefficients; at most one member of a group can take value 1.
  std::vector<std::vector<int>> groups_;
  std::vector<bool> group_exact_;
  std::vector<int> group_of_;
  std::vector<int64_t> objective_coef_;

  // An objective column `aux` that a row forces to 1 once the grouped
  // `anchor` is 1 and every blocker is 0. When the blockers are a prefix of
  // another group (the envier's better-or-equal choices), the cost can also
  // be charged to that group once the anchor is fixed.
  struct Trigger {
    int aux;
    int64_t weight;
    int anchor;
    std::vector<int> blockers;
    int blocker_group;  // -1 unless blockers are a prefix of one group
    int prefix;         // number of leading group members that block
  };
  void FindTriggers();
  std::vector<Trigger> triggers_;
  std::vector<int> group_offset_;         // into group_diff_
  mutable std::vector<int64_t> extra_;     // per grouped variable
  mutable std::vector<int64_t> group_diff_;
  // Filled by Bound(): the cost of each open grouped variable, and each
  // group's cheapest choice.
  mutable std::vector<int64_t> choice_cost_;
  mutable std::vector<int64_t> group_best_;
  // Fixes to 0 every open choice that alone lifts `bound` to the incumbent.
  // Returns false on a conflict; sets `changed` when something was fixed.
  bool FilterChoices(int64_t bound, bool& changed);

  std::vector<TrailEntry> trail_;
  std::vector<int> queue_;
  std::vector<bool> in_queue_;

  int64_t best_ = kNoCutoff;
  std::vector<int64_t> incumbent_;
  bool has_incumbent_ = false;
  bool stop_ = false;
  bool limit_hit_ = false;
  SolveStats stats_;
  std::chrono::steady_clock::time_point start_time_;
};

BranchAndBound::BranchAndBound(const LinearModel& model,
                               const Objective* objective,
                               const SolverConfig& config)
    : model_(model), objective_(objective), config_(config) {
  num_vars_ = model.num_vars();
  lo_.assign(num_vars_, 0);
  hi_.resize(num_vars_);
  prefer_one_.resize(num_vars_);
  group_of_.assign(num_vars_, -1);
  objective_coef_.assign(num_vars_, 0);
  for (int v = 0; v < num_vars_; ++v) {
    hi_[v] = std::max<int64_t>(0, model.var(v).upper);
    prefer_one_[v] = model.var(v).kind == VarKind::kMatch;
  }
  for (const LinearConstraint& row : model.constraints()) {
    switch (row.sense) {
      case Sense::kLessEqual:
        AddRow(row.terms, 1, row.rhs);
        break;
      case Sense::kGreaterEqual:
        AddRow(row.terms, -1, -row.rhs);
        break;
      case Sense::kEqual:
        AddRow(row.terms, 1, row.rhs);
        AddRow(row.terms, -1, -row.rhs);
        break;
    }
    const bool unit = std::all_of(
        row.terms.begin(), row.terms.end(), [&](const Term& t) {
          return t.coef == 1 && hi_[t.var] <= 1 && group_of_[t.var] < 0;
        });
    if (row.tag == RowTag::kEq1 && row.rhs == 1 && unit &&
        row.sense != Sense::kGreaterEqual && !row.terms.empty()) {
      const int g = static_cast<int>(groups_.size());
      groups_.emplace_back();
      group_exact_.push_back(row.sense == Sense::kEqual);
      for (const Term& t : row.terms) {
        groups_[g].push_back(t.var);
        group_of_[t.var] = g;
      }
    }
  }
  if (objective_ != nullptr) {
    objective_row_ = AddRow(objective_->terms, 1, kNoCutoff);
    for (const Term& t : objective_->terms) objective_coef_[t.var] += t.coef;
    FindTriggers();
  }
  choice_cost_.assign(num_vars_, 0);
  group_best_.assign(groups_.size(), 0);
  flow_bound_.emplace(model, objective_);
  if (!flow_bound_->active()) flow_bound_.reset();
  Finalize();
}

int BranchAndBound::AddRow(const std::vector<Term>& terms, int64_t sign,
                           int64_t rhs) {
  int64_t swing = 0;
  int64_t act = 0;
  for (const Term& t : terms) {
    const int64_t a = sign * t.coef;
    if (a == 0) continue;
    row_var_.push_back(t.var);
    row_coef_.push_back(a);
    act += a > 0 ? a * lo_[t.var] : a * hi_[t.var];
    swing = std::max(swing, (a > 0 ? a : -a) * (hi_[t.var] - lo_[t.var]));
  }
  row_start_.push_back(static_cast<int>(row_var_.size()));
  rhs_.push_back(rhs);
  min_activity_.push_back(act);
  row_max_swing_.push_back(swing);
  return static_cast<int>(rhs_.size()) - 1;
}

void BranchAndBound::Finalize() {
  const int num_rows = static_cast<int>(rhs_.size());
  std::vector<int> count(num_vars_ + 1, 0);
  for (int v : row_var_) ++count[v + 1];
  col_start_.assign(num_vars_ + 1, 0);
  for (int v = 0; v < num_vars_; ++v) col_start_[v + 1] = col_start_[v] + count[v + 1];
  col_row_.resize(row_var_.size());
  col_coef_.resize(row_var_.size());
  std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
  for (int r = 0; r < num_rows; ++r) {
    for (int p = row_start_[r]; p < row_start_[r + 1]; ++p) {
      const int v = row_var_[p];
      col_row_[fill[v]] = r;
      col_coef_[fill[v]] = row_coef_[p];
      ++fill[v];
    }
  }
  in_queue_.assign(num_rows, false);
}

void BranchAndBound::Enqueue(int r) {
  if (in_queue_[r]) return;
  in_queue_[r] = true;
  queue_.push_back(r);
}

void BranchAndBound::ClearQueue() {
  for (int r : queue_) in_queue_[r] = false;
  queue_.clear();
}

bool BranchAndBound::Tighten(int v, int64_t lo, int64_t hi) {
  lo = std::max(lo, lo_[v]);
  hi = std::min(hi, hi_[v]);
  if (lo == lo_[v] && hi == hi_[v]) return true;
  if (lo > hi) return false;
  trail_.push_back({v, lo_[v], hi_[v]});
  for (int p = col_start_[v]; p < col_start_[v + 1]; ++p) {
    const int64_t a = col_coef_[p];
    const int64_t delta = a > 0 ? a * (lo - lo_[v]) : a * (hi - hi_[v]);
    if (delta != 0) {
      min_activity_[col_row_[p]] += delta;
      Enqueue(col_row_[p]);
    }
  }
  lo_[v] = lo;
  hi_[v] = hi;
  return true;
}

bool BranchAndBound::Propagate() {
  // FIFO over a growing vector; callers clear it after a conflict.
  for (size_t head = 0; head < queue_.size(); ++head) {
    const int r = queue_[head];
    in_queue_[r] = false;
    ++stats_.propagations;
    const int64_t slack = rhs_[r] - min_activity_[r];
    if (slack < 0) return false;
    if (slack >= row_max_swing_[r]) continue;
    for (int p = row_start_[r]; p < row_start_[r + 1]; ++p) {
      const int v = row_var_[p];
      const int64_t a = row_coef_[p];
      const int64_t range = hi_[v] - lo_[v];
      if (range == 0) continue;
      if (a > 0) {
        if (a * range > slack && !Tighten(v, lo_[v], lo_[v] + slack / a)) {
          return false;
        }
      } else if (-a * range > slack &&
                 !Tighten(v, hi_[v] - slack / -a, hi_[v])) {
        return false;
      }
    }
  }
  queue_.clear();
  return true;
}

void BranchAndBound::Undo(size_t mark) {
  while (trail_.size() > mark) {
    const TrailEntry e = trail_.back();
    trail_.pop_back();
    const int v = e.var;
    for (int p = col_start_[v]; p < col_start_[v + 1]; ++p) {
      const int64_t a = col_coef_[p];
      min_activity_[col_row_[p]] -=
          a > 0 ? a * (lo_[v] - e.lo) : a * (hi_[v] - e.hi);
    }
    lo_[v] = e.lo;
    hi_[v] = e.hi;
  }
}

// Lower bound on the objective: independent bounds for ungrouped columns, and
// for each group the cheapest member it can still pick (or nothing, when the
// group's row is an inequality).
// Lower bound on the objective. Ungrouped columns contribute independently.
// Each group contributes the cheapest choice it can still make, where a
// choice also pays for the objective columns it would force through
// triggers; every trigger is charged to at most one group.
int64_t BranchAndBound::Bound() const {
  int64_t bound = objective_->constant;
  for (int v = 0; v < num_vars_; ++v) {
    if (group_of_[v] >= 0) continue;
    const int64_t c = objective_coef_[v];
    bound += c > 0 ? c * lo_[v] : c * hi_[v];
  }
  if (!triggers_.empty()) {
    std::fill(extra_.begin(), extra_.end(), 0);
    std::fill(group_diff_.begin(), group_diff_.end(), 0);
    for (const Trigger& t : triggers_) {
      if (lo_[t.aux] > 0 || hi_[t.aux] == 0) continue;
      if (lo_[t.anchor] == 1) {
        if (t.blocker_group >= 0) {
          group_diff_[group_offset_[t.blocker_group] + t.prefix] += t.weight;
        }
      } else if (hi_[t.anchor] == 1 &&
                 std::all_of(t.blockers.begin(), t.blockers.end(),
                             [&](int b) { return hi_[b] == 0; })) {
        extra_[t.anchor] += t.weight;
      }
    }
  }
  for (size_t g = 0; g < groups_.size(); ++g) {
    const std::vector<int>& members = groups_[g];
    int64_t best = kNoCutoff;
    bool fixed = false;
    int64_t running = 0;
    for (size_t q = 0; q < members.size(); ++q) {
      const int v = members[q];
      if (!triggers_.empty()) running += group_diff_[group_offset_[g] + q];
      if (lo_[v] == 1) {
        best = objective_coef_[v];
        fixed = true;
        break;
      }
      if (hi_[v] != 1) continue;
      int64_t cost = objective_coef_[v];
      if (!triggers_.empty()) cost += extra_[v] + running;
      choice_cost_[v] = cost;
      best = std::min(best, cost);
    }
    if (!fixed && !group_exact_[g]) {
      int64_t unmatched = 0;
      if (!triggers_.empty()) {
        for (size_t q = 0; q <= members.size(); ++q) {
          unmatched += group_diff_[group_offset_[g] + q];
        }
      }
      best = std::min(best, unmatched);
    }
    if (best == kNoCutoff) return kNoCutoff;
    group_best_[g] = fixed ? kNoCutoff : best;
    bound += best;
  }
  return bound;
}

bool BranchAndBound::FilterChoices(int64_t bound, bool& changed) {
  changed = false;
  for (size_t g = 0; g < groups_.size(); ++g) {
    if (group_best_[g] == kNoCutoff) continue;
    for (int v : groups_[g]) {
      if (lo_[v] != hi_[v] &&
          bound - group_best_[g] + choice_cost_[v] >= best_) {
        if (!Tighten(v, 0, 0)) return false;
        changed = true;
      }
    }
  }
  return true;
}

void BranchAndBound::FindTriggers() {
  std::vector<int> appearances(num_vars_, 0);
  for (const LinearConstraint& row : model_.constraints()) {
    for (const Term& t : row.terms) ++appearances[t.var];
  }
  std::vector<int> position(num_vars_, -1);
  for (const auto& members : groups_) {
    for (size_t q = 0; q < members.size(); ++q) position[members[q]] = static_cast<int>(q);
  }
  for (const LinearConstraint& row : model_.constraints()) {
    if (row.sense != Sense::kGreaterEqual || row.rhs != 0) continue;
    int anchor = -1;
    int aux = -1;
    bool ok = true;
    std::vector<int> blockers;
    for (const Term& t : row.terms) {
      if (t.coef == -1 && group_of_[t.var] >= 0 && anchor < 0) {
        anchor = t.var;
      } else if (t.coef > 0 && group_of_[t.var] < 0 &&
                 objective_coef_[t.var] > 0 && appearances[t.var] == 1 &&
                 aux < 0) {
        aux = t.var;
      } else if (t.coef > 0 && hi_[t.var] <= 1) {
        blockers.push_back(t.var);
      } else {
        ok = false;
      }
    }
    if (!ok || anchor < 0 || aux < 0) continue;
    Trigger trigger{aux, objective_coef_[aux], anchor, blockers, -1, 0};
    // Blockers that are exactly the first k members of one group.
    const int g = blockers.empty() ? -1 : group_of_[blockers.front()];
    if (g >= 0 && g != group_of_[anchor]) {
      std::vector<bool> seen(groups_[g].size(), false);
      bool prefix = true;
      for (int b : blockers) {
        if (group_of_[b] != g) {
          prefix = false;
          break;
        }
        seen[position[b]] = true;
      }
      const int k = static_cast<int>(blockers.size());
      for (int q = 0; q < k && prefix; ++q) prefix = seen[q];
      if (prefix) {
        trigger.blocker_group = g;
        trigger.prefix = k;
      }
    }
    triggers_.push_back(std::move(trigger));
  }
  if (triggers_.empty()) return;
  extra_.assign(num_vars_, 0);
  int offset = 0;
  for (const auto& members : groups_) {
    group_offset_.push_back(offset);
    offset += static_cast<int>(members.size()) + 1;
  }
  group_diff_.assign(offset, 0);
}

int BranchAndBound::Pick(int start) const {
  if (!config_.deterministic &&
      config_.branch_rule == BranchRule::kMostConstrained) {
    int best_group = -1;
    int best_free = std::numeric_limits<int>::max();
    for (size_t g = 0; g < groups_.size(); ++g) {
      int free = 0;
      bool done = false;
      for (int v : groups_[g]) {
        if (lo_[v] == 1) done = true;
        if (lo_[v] != hi_[v]) ++free;
      }
      if (!done && free > 0 && free < best_free) {
        best_free = free;
        best_group = static_cast<int>(g);
      }
    }
    if (best_group >= 0) {
      for (int v : groups_[best_group]) {
        if (lo_[v] != hi_[v]) return v;
      }
    }
    start = 0;
  }
  for (int v = start; v < num_vars_; ++v) {
    if (lo_[v] != hi_[v]) return v;
  }
  return -1;
}

bool BranchAndBound::OutOfBudget() {
  if (stats_.nodes > config_.node_limit) return true;
  if ((stats_.nodes & 1023) == 0) {
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start_time_;
    if (elapsed.count() > config_.time_limit_seconds) return true;
  }
  return false;
}

void BranchAndBound::RecordLeaf() {
  incumbent_ = lo_;
  has_incumbent_ = true;
  if (objective_ == nullptr) {
    stop_ = true;
    return;
  }
  int64_t value = objective_->constant;
  for (const Term& t : objective_->terms) value += t.coef * lo_[t.var];
  best_ = value;
  rhs_[objective_row_] = value - 1 - objective_->constant;
}

void BranchAndBound::Dfs(int start) {
  ++stats_.nodes;
  if (OutOfBudget()) {
    limit_hit_ = stop_ = true;
    return;
  }
  if (objective_ != nullptr) {
    for (int round = 0;; ++round) {
      const int64_t bound = Bound();
      if (bound >= best_) return;
      if (best_ == kNoCutoff || round == 4) break;
      bool changed = false;
      if (!FilterChoices(bound, changed) || (changed && !Propagate())) {
        ClearQueue();
        return;
      }
      if (!changed) break;
    }
  }
  if (flow_bound_ && flow_bound_->Compute(lo_, hi_) >= best_) return;
  const int v = Pick(start);
  if (v < 0) {
    RecordLeaf();
    return;
  }
  const int64_t lo = lo_[v];
  const int64_t hi = hi_[v];
  const int next = config_.deterministic ||
                           config_.branch_rule == BranchRule::kFirstUnfixed
                       ? v + 1
                       : 0;
  auto branch = [&](int64_t value) {
    const size_t mark = trail_.size();
    if (objective_row_ >= 0) Enqueue(objective_row_);
    if (Tighten(v, value, value) && Propagate()) Dfs(next);
    ClearQueue();
    Undo(mark);
  };
  if (prefer_one_[v]) {
    for (int64_t value = hi; value >= lo && !stop_; --value) branch(value);
  } else {
    for (int64_t value = lo; value <= hi && !stop_; ++value) branch(value);
  }
}

SolveOutcome BranchAndBound::Run() {
  start_time_ = std::chrono::steady_clock::now();
  SolveOutcome out;
  for (int r = 0; r < static_cast<int>(rhs_.size()); ++r) Enqueue(r);
  if (Propagate()) Dfs(0);
  ClearQueue();
  out.stats = stats_;
  if (limit_hit_) {
    out.status = SolveStatus::kLimitReached;
  } else {
    out.status = has_incumbent_ ? SolveStatus::kOptimal : SolveStatus::kInfeasible;
  }
  if (has_incumbent_) {
    out.assignment = incumbent_;
    for (const Objective& o : model_.objectives()) {
      out.objective_values.push_back(EvaluateObjective(o, out.assignment));
    }
  }
  return out;
}

}  // namespace

SolveOutcome Solve(const LinearModel& model, const SolverConfig& config) {
  const Objective* objective =
      model.objectives().empty() ? nullptr : &model.objectives().front();
  return BranchAndBound(model, objective, config).Run();
}

SolveOutcome SolveLexicographic(const LinearModel& model,
                                const SolverConfig& config) {
  if (model.objectives().size() <= 1) return Solve(model, config);
  LinearModel staged = model;
  SolveStats total;
  SolveOutcome out;
  for (size_t k = 0; k < model.objectives().size(); ++k) {
    const Objective& objective = model.objectives()[k];
    out = BranchAndBound(staged, &objective, config).Run();
    total.nodes += out.stats.nodes;
    total.propagations += out.stats.propagations;
    if (out.status != SolveStatus::kOptimal) break;
    staged.AddConstraint({objective.terms, Sense::kEqual,
                          out.objective_values[k] - objective.constant,
                          RowTag::kLexFix});
  }
  out.stats = total;
  return out;
}

}  // namespace quotamatch
