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

#include "quotamatch/ipmodel/linear_model.h"

#include <algorithm>
#include <utility>

#include "absl/strings/str_cat.h"

namespace quotamatch {

std::string_view RowTagName(RowTag tag) {
  switch (tag) {
    case RowTag::kEq1: return "EQ1";
    case RowTag::kEq2: return "EQ2";
    case RowTag::kEq3: return "EQ3";
    case RowTag::kEq4: return "EQ4";
    case RowTag::kEq5: return "EQ5";
    case RowTag::kEq6: return "EQ6";
    case RowTag::kEq7: return "EQ7";
    case RowTag::kEq8: return "EQ8";
    case RowTag::kEq9: return "EQ9";
    case RowTag::kEq10: return "EQ10";
    case RowTag::kEq11: return "EQ11";
    case RowTag::kEq12: return "EQ12";
    case RowTag::kEq13: return "EQ13";
    case RowTag::kEq14: return "EQ14";
    case RowTag::kEq15: return "EQ15";
    case RowTag::kFix: return "FIX";
    case RowTag::kLexFix: return "LEXFIX";
  }
  return "?";
}

LinearModel::LinearModel(int num_applicants, int num_companies)
    : num_applicants_(num_applicants),
      num_companies_(num_companies),
      match_index_(static_cast<size_t>(num_applicants) * num_companies, -1) {}

int LinearModel::AddVariable(const VariableRef& ref) {
  const int v = num_vars();
  vars_.push_back(ref);
  if (ref.kind == VarKind::kMatch) {
    match_index_[static_cast<size_t>(ref.applicant) * num_companies_ +
                 ref.company] = v;
  }
  return v;
}

void LinearModel::AddConstraint(LinearConstraint row) {
  rows_.push_back(std::move(row));
}

ObjectiveHandle LinearModel::AddObjective(Objective objective) {
  objectives_.push_back(std::move(objective));
  return static_cast<ObjectiveHandle>(objectives_.size()) - 1;
}

int LinearModel::RemoveConstraints(RowTag tag) {
  const auto before = rows_.size();
  std::erase_if(rows_, [tag](const LinearConstraint& r) { return r.tag == tag; });
  return static_cast<int>(before - rows_.size());
}

int LinearModel::CountRows(RowTag tag) const {
  return static_cast<int>(std::count_if(
      rows_.begin(), rows_.end(),
      [tag](const LinearConstraint& r) { return r.tag == tag; }));
}

int LinearModel::match_var(int i, int j) const {
  if (i < 0 || i >= num_applicants_ || j < 0 || j >= num_companies_) return -1;
  return match_index_[static_cast<size_t>(i) * num_companies_ + j];
}

std::string LinearModel::VarName(int v) const {
  const VariableRef& r = vars_[v];
  switch (r.kind) {
    case VarKind::kMatch:
      return absl::StrCat("x_", r.applicant + 1, "_", r.company + 1);
    case VarKind::kDeficiency:
      return absl::StrCat("d_", r.applicant + 1, "_", r.company + 1);
    case VarKind::kCrossEnvy:
      return absl::StrCat("e_", r.applicant + 1, "_", r.envied + 1, "_",
                          r.company + 1);
    case VarKind::kOpenSlot:
      return absl::StrCat("o_", r.applicant + 1, "_", r.company + 1);
  }
  return absl::StrCat("v", v);
}

namespace {

void AppendTerms(std::string& out, const LinearModel& model,
                 const std::vector<Term>& terms) {
  if (terms.empty()) {
    out += "0";
    return;
  }
  bool first = true;
  for (const Term& t : terms) {
    if (!first) out += t.coef < 0 ? " - " : " + ";
    else if (t.coef < 0) out += "-";
    first = false;
    const int64_t c = t.coef < 0 ? -t.coef : t.coef;
    if (c != 1) absl::StrAppend(&out, c, " ");
    out += model.VarName(t.var);
  }
}

}  // namespace

std::string LinearModel::Dump() const {
  std::string out;
  for (size_t o = 0; o < objectives_.size(); ++o) {
    absl::StrAppend(&out, "min[", o, "] ", objectives_[o].label, ": ");
    AppendTerms(out, *this, objectives_[o].terms);
    if (objectives_[o].constant != 0) {
      absl::StrAppend(&out, " + ", objectives_[o].constant);
    }
    out += "\n";
  }
  out += "subject to\n";
  for (const LinearConstraint& r : rows_) {
    absl::StrAppend(&out, "  ", std::string(RowTagName(r.tag)), ": ");
    AppendTerms(out, *this, r.terms);
    const char* sense = r.sense == Sense::kLessEqual      ? " <= "
                        : r.sense == Sense::kGreaterEqual ? " >= "
                                                          : " = ";
    absl::StrAppend(&out, sense, r.rhs, "\n");
  }
  out += "bounds\n";
  for (int v = 0; v < num_vars(); ++v) {
    absl::StrAppend(&out, "  ", VarName(v),
                    vars_[v].domain == VarDomain::kBinary ? " binary"
                                                          : " integer",
                    " [0, ", vars_[v].upper, "]\n");
  }
  return out;
}

int64_t EvaluateObjective(const Objective& objective,
                          std::span<const int64_t> values) {
  int64_t total = objective.constant;
  for (const Term& t : objective.terms) total += t.coef * values[t.var];
  return total;
}

Evaluation Evaluate(const LinearModel& model, std::span<const int64_t> values) {
  Evaluation ev;
  for (int v = 0; v < model.num_vars(); ++v) {
    if (values[v] < 0 || values[v] > model.var(v).upper) ev.feasible = false;
  }
  const auto& rows = model.constraints();
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    int64_t lhs = 0;
    for (const Term& t : rows[r].terms) lhs += t.coef * values[t.var];
    bool ok = true;
    switch (rows[r].sense) {
      case Sense::kLessEqual: ok = lhs <= rows[r].rhs; break;
      case Sense::kGreaterEqual: ok = lhs >= rows[r].rhs; break;
      case Sense::kEqual: ok = lhs == rows[r].rhs; break;
    }
    if (!ok) {
      ev.feasible = false;
      ev.violated_rows.push_back(r);
    }
  }
  for (const Objective& o : model.objectives()) {
    ev.objective_values.push_back(EvaluateObjective(o, values));
  }
  return ev;
}

}  // namespace quotamatch
