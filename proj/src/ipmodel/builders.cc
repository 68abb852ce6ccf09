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

#include "quotamatch/ipmodel/builders.h"

#include <algorithm>
#include <utility>

namespace quotamatch {
namespace {

// Collapses repeated variables and drops zero coefficients.
std::vector<Term> Merge(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> out;
  for (const Term& t : terms) {
    if (!out.empty() && out.back().var == t.var) {
      out.back().coef += t.coef;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0; });
  return out;
}

void AddRow(LinearModel& model, std::vector<Term> terms, Sense sense,
            int64_t rhs, RowTag tag) {
  model.AddConstraint({Merge(std::move(terms)), sense, rhs, tag});
}

// x_ik for every k with r_ik <= r_ij, scaled by `coef`.
void AppendBetterOrEqual(const LinearModel& model, const Instance& inst, int i,
                         int j, int64_t coef, std::vector<Term>& terms) {
  for (int a : inst.applications_of(i)) {
    const int k = inst.application(a).company;
    terms.push_back({coef, model.match_var(i, k)});
    if (k == j) break;
  }
}

// Weak (>=) or strict (>) stability rows plus an optional slack column.
enum class Slack { kNone, kDeficiency, kBlocking };

void AddStabilityRows(LinearModel& model, const Instance& inst, bool ties,
                      Slack slack, RowTag tag) {
  for (int i = 0; i < inst.num_applicants(); ++i) {
    for (int a : inst.applications_of(i)) {
      const int j = inst.application(a).company;
      const int64_t u = inst.company(j).upper;
      const Score s = inst.score(i, j);
      std::vector<Term> terms;
      AppendBetterOrEqual(model, inst, i, j, u, terms);
      for (int b : inst.applications_to(j)) {
        const Application& other = inst.application(b);
        if (ties ? other.score >= s : other.score > s) {
          terms.push_back({1, model.match_var(other.applicant, j)});
        }
      }
      switch (slack) {
        case Slack::kNone:
          break;
        case Slack::kDeficiency: {
          const int d = model.AddVariable({VarKind::kDeficiency, i, j, -1,
                                           VarDomain::kNonNegInteger,
                                           std::max<int64_t>(u, 0)});
          terms.push_back({1, d});
          break;
        }
        case Slack::kBlocking: {
          const int d = model.AddVariable({VarKind::kDeficiency, i, j});
          terms.push_back({u, d});
          break;
        }
      }
      AddRow(model, std::move(terms), Sense::kGreaterEqual, u, tag);
    }
  }
}

// Sum of the auxiliary columns of `kind` created after `first_var`.
Objective SumOfNew(const LinearModel& model, int first_var, VarKind kind,
                   std::string label) {
  Objective obj;
  obj.label = std::move(label);
  for (int v = first_var; v < model.num_vars(); ++v) {
    if (model.var(v).kind == kind) obj.terms.push_back({1, v});
  }
  return obj;
}

void AddEnvyRows(LinearModel& model, const Instance& inst, bool same_type_only,
                 RowTag tag) {
  for (int j = 0; j < inst.num_companies(); ++j) {
    for (int a : inst.applications_to(j)) {
      const Application& envier = inst.application(a);
      for (int b : inst.applications_to(j)) {
        const Application& envied = inst.application(b);
        if (envier.score <= envied.score) continue;
        if (same_type_only &&
            inst.type_of(envier.applicant) != inst.type_of(envied.applicant)) {
          continue;
        }
        std::vector<Term> terms;
        AppendBetterOrEqual(model, inst, envier.applicant, j, 1, terms);
        terms.push_back({-1, model.match_var(envied.applicant, j)});
        AddRow(model, std::move(terms), Sense::kGreaterEqual, 0, tag);
      }
    }
  }
}

}  // namespace

LinearModel BuildFeasibility(const Instance& inst, bool prune_vacuous) {
  LinearModel model(inst.num_applicants(), inst.num_companies());
  model.set_prune_vacuous(prune_vacuous);
  for (int i = 0; i < inst.num_applicants(); ++i) {
    for (int a : inst.applications_of(i)) {
      model.AddVariable({VarKind::kMatch, i, inst.application(a).company});
    }
  }
  for (int i = 0; i < inst.num_applicants(); ++i) {
    std::vector<Term> terms;
    for (int a : inst.applications_of(i)) {
      terms.push_back({1, model.match_var(i, inst.application(a).company)});
    }
    AddRow(model, std::move(terms), Sense::kLessEqual, 1, RowTag::kEq1);
  }
  for (int j = 0; j < inst.num_companies(); ++j) {
    std::vector<Term> terms;
    for (int a : inst.applications_to(j)) {
      terms.push_back({1, model.match_var(inst.application(a).applicant, j)});
    }
    AddRow(model, std::move(terms), Sense::kLessEqual, inst.company(j).upper,
           RowTag::kEq2);
  }
  return model;
}

LinearModel BuildBase(const Instance& inst, bool ties, bool prune_vacuous) {
  LinearModel model = BuildFeasibility(inst, prune_vacuous);
  AddStability(model, inst, ties);
  return model;
}

void AddStability(LinearModel& model, const Instance& inst, bool ties) {
  AddStabilityRows(model, inst, ties, Slack::kNone,
                   ties ? RowTag::kEq4 : RowTag::kEq3);
}

void RequireComplete(LinearModel& model, const Instance& inst) {
  model.RemoveConstraints(RowTag::kEq1);
  for (int i = 0; i < inst.num_applicants(); ++i) {
    std::vector<Term> terms;
    for (int a : inst.applications_of(i)) {
      terms.push_back({1, model.match_var(i, inst.application(a).company)});
    }
    const Sense sense = terms.empty() ? Sense::kLessEqual : Sense::kEqual;
    AddRow(model, std::move(terms), sense, 1, RowTag::kEq1);
  }
}

void AddLowerQuotas(LinearModel& model, const Instance& inst) {
  for (int j = 0; j < inst.num_companies(); ++j) {
    const int l = inst.company(j).lower;
    if (l <= 0 && model.prune_vacuous()) continue;
    std::vector<Term> terms;
    for (int a : inst.applications_to(j)) {
      terms.push_back({1, model.match_var(inst.application(a).applicant, j)});
    }
    AddRow(model, std::move(terms), Sense::kGreaterEqual, l, RowTag::kEq5);
  }
}

void AddTypeQuotas(LinearModel& model, const Instance& inst) {
  for (int j = 0; j < inst.num_companies(); ++j) {
    for (int k = 0; k < inst.num_types(); ++k) {
      std::vector<Term> terms;
      for (int a : inst.applications_to(j)) {
        const int i = inst.application(a).applicant;
        if (inst.type_of(i) == k) terms.push_back({1, model.match_var(i, j)});
      }
      const int reach = std::min<int>(inst.company(j).upper,
                                      static_cast<int>(terms.size()));
      const int upper = inst.type_upper(j, k);
      const int lower = inst.type_lower(j, k);
      if (!model.prune_vacuous() || upper < reach) {
        AddRow(model, terms, Sense::kLessEqual, upper, RowTag::kEq6);
      }
      if (!model.prune_vacuous() || lower > 0) {
        AddRow(model, terms, Sense::kGreaterEqual, lower, RowTag::kEq7);
      }
    }
  }
}

void AddGlobalTypeQuotas(LinearModel& model, const Instance& inst) {
  for (int k = 0; k < inst.num_types(); ++k) {
    std::vector<Term> terms;
    int reach = 0;
    for (int i = 0; i < inst.num_applicants(); ++i) {
      if (inst.type_of(i) != k) continue;
      if (!inst.applications_of(i).empty()) ++reach;
      for (int a : inst.applications_of(i)) {
        terms.push_back({1, model.match_var(i, inst.application(a).company)});
      }
    }
    const int upper = inst.global_upper(k);
    const int lower = inst.global_lower(k);
    if (!model.prune_vacuous() || upper < reach) {
      AddRow(model, terms, Sense::kLessEqual, upper, RowTag::kEq8);
    }
    if (!model.prune_vacuous() || lower > 0) {
      AddRow(model, terms, Sense::kGreaterEqual, lower, RowTag::kEq9);
    }
  }
}

ObjectiveHandle AddMinDeficiency(LinearModel& model, const Instance& inst) {
  model.RemoveConstraints(RowTag::kEq4);
  const int first = model.num_vars();
  AddStabilityRows(model, inst, /*ties=*/true, Slack::kDeficiency,
                   RowTag::kEq10);
  return model.AddObjective(
      SumOfNew(model, first, VarKind::kDeficiency, "Deficiency"));
}

ObjectiveHandle AddAlmostStable(LinearModel& model, const Instance& inst) {
  model.RemoveConstraints(RowTag::kEq4);
  const int first = model.num_vars();
  AddStabilityRows(model, inst, /*ties=*/true, Slack::kBlocking,
                   RowTag::kEq11);
  return model.AddObjective(
      SumOfNew(model, first, VarKind::kDeficiency, "Blocking"));
}

void AddEnvyFree(LinearModel& model, const Instance& inst) {
  AddEnvyRows(model, inst, /*same_type_only=*/false, RowTag::kEq12);
}

void AddWithinTypeEnvyFree(LinearModel& model, const Instance& inst) {
  AddEnvyRows(model, inst, /*same_type_only=*/true, RowTag::kEq13);
}

ObjectiveHandle AddCrossTypeEnvyTracking(LinearModel& model,
                                         const Instance& inst,
                                         EnvyWeight weight,
                                         bool include_same_type) {
  Objective obj;
  obj.label = weight == EnvyWeight::kCount ? "EnvyCount" : "EnvyIntensity";
  for (int j = 0; j < inst.num_companies(); ++j) {
    for (int a : inst.applications_to(j)) {
      const Application& envier = inst.application(a);
      for (int b : inst.applications_to(j)) {
        const Application& envied = inst.application(b);
        if (envier.applicant == envied.applicant) continue;
        if (!include_same_type &&
            inst.type_of(envier.applicant) == inst.type_of(envied.applicant)) {
          continue;
        }
        int64_t w = 0;
        if (envier.score > envied.score) {
          w = weight == EnvyWeight::kCount ? 1 : envier.score - envied.score;
        }
        if (w == 0 && model.prune_vacuous()) continue;
        const int e = model.AddVariable(
            {VarKind::kCrossEnvy, envier.applicant, j, envied.applicant});
        std::vector<Term> terms;
        AppendBetterOrEqual(model, inst, envier.applicant, j, 1, terms);
        terms.push_back({1, e});
        terms.push_back({-1, model.match_var(envied.applicant, j)});
        AddRow(model, std::move(terms), Sense::kGreaterEqual, 0,
               RowTag::kEq14);
        if (w != 0) obj.terms.push_back({w, e});
      }
    }
  }
  return model.AddObjective(std::move(obj));
}

ObjectiveHandle AddOpenSlotCounting(LinearModel& model, const Instance& inst) {
  Objective obj;
  obj.label = "OpenSlot";
  for (int i = 0; i < inst.num_applicants(); ++i) {
    for (int a : inst.applications_of(i)) {
      const int j = inst.application(a).company;
      const int64_t u = inst.company(j).upper;
      const int o = model.AddVariable({VarKind::kOpenSlot, i, j});
      std::vector<Term> terms;
      AppendBetterOrEqual(model, inst, i, j, u, terms);
      terms.push_back({u, o});
      for (int b : inst.applications_to(j)) {
        terms.push_back({1, model.match_var(inst.application(b).applicant, j)});
      }
      AddRow(model, std::move(terms), Sense::kGreaterEqual, u, RowTag::kEq15);
      obj.terms.push_back({1, o});
    }
  }
  return model.AddObjective(std::move(obj));
}

ObjectiveHandle AddRankObjective(LinearModel& model, const Instance& inst) {
  Objective obj;
  obj.label = "Rank";
  for (int v = 0; v < model.num_vars(); ++v) {
    const VariableRef& r = model.var(v);
    if (r.kind != VarKind::kMatch) continue;
    obj.terms.push_back({inst.rank(r.applicant, r.company), v});
  }
  return model.AddObjective(std::move(obj));
}

ObjectiveHandle AddUnmatchedObjective(LinearModel& model,
                                      const Instance& inst) {
  Objective obj;
  obj.label = "Unmatched";
  for (int i = 0; i < inst.num_applicants(); ++i) {
    if (!inst.applications_of(i).empty()) ++obj.constant;
  }
  for (int v = 0; v < model.num_vars(); ++v) {
    if (model.var(v).kind == VarKind::kMatch) obj.terms.push_back({-1, v});
  }
  return model.AddObjective(std::move(obj));
}

std::vector<int64_t> CharacteristicVector(const LinearModel& model,
                                          const Matching& m) {
  std::vector<int64_t> values(model.num_vars(), 0);
  for (int i = 0; i < m.num_applicants() && i < model.num_applicants(); ++i) {
    if (!m.is_matched(i)) continue;
    const int v = model.match_var(i, m.company_of(i));
    if (v >= 0) values[v] = 1;
  }
  return values;
}

std::vector<int64_t> MinimalCompletion(const LinearModel& model,
                                       const Matching& m) {
  std::vector<int64_t> values = CharacteristicVector(model, m);
  // Each auxiliary column appears in rows of the form
  //   (match terms) + c * aux >= rhs  with c > 0,
  // so its smallest admissible value is ceil(shortfall / c).
  for (const LinearConstraint& row : model.constraints()) {
    if (row.sense != Sense::kGreaterEqual) continue;
    int64_t lhs = 0;
    const Term* aux = nullptr;
    for (const Term& t : row.terms) {
      if (model.var(t.var).kind == VarKind::kMatch) {
        lhs += t.coef * values[t.var];
      } else if (t.coef > 0) {
        aux = &t;
      }
    }
    if (aux == nullptr || lhs >= row.rhs) continue;
    const int64_t need = (row.rhs - lhs + aux->coef - 1) / aux->coef;
    values[aux->var] = std::max(values[aux->var],
                                std::min(need, model.var(aux->var).upper));
  }
  return values;
}

Matching MatchingFromAssignment(const LinearModel& model,
                                std::span<const int64_t> values) {
  Matching m(model.num_applicants());
  for (int v = 0; v < model.num_vars(); ++v) {
    const VariableRef& r = model.var(v);
    if (r.kind == VarKind::kMatch && values[v] > 0) m.Assign(r.applicant, r.company);
  }
  return m;
}

}  // namespace quotamatch
