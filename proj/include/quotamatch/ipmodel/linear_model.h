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

#ifndef QUOTAMATCH_IPMODEL_LINEAR_MODEL_H_
#define QUOTAMATCH_IPMODEL_LINEAR_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quotamatch {

enum class VarKind { kMatch, kDeficiency, kCrossEnvy, kOpenSlot };
enum class VarDomain { kBinary, kNonNegInteger };

// A model column. `applicant` / `company` identify the application; for
// kCrossEnvy, `applicant` is the envier and `envied` the envied applicant.
struct VariableRef {
  VarKind kind = VarKind::kMatch;
  int applicant = 0;
  int company = 0;
  int envied = -1;
  VarDomain domain = VarDomain::kBinary;
  int64_t upper = 1;  // finite upper bound; 1 for binaries

  friend bool operator==(const VariableRef&, const VariableRef&) = default;
};

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

// Source formulation of a row. kEq1..kEq15 follow the numbered families of
// the stable-allocation formulations; kFix marks fixings added by callers and
// kLexFix the objective-value equalities added between lexicographic stages.
enum class RowTag {
  kEq1, kEq2, kEq3, kEq4, kEq5, kEq6, kEq7, kEq8, kEq9, kEq10,
  kEq11, kEq12, kEq13, kEq14, kEq15, kFix, kLexFix,
};

std::string_view RowTagName(RowTag tag);

struct Term {
  int64_t coef = 0;
  int var = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

struct LinearConstraint {
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  int64_t rhs = 0;
  RowTag tag = RowTag::kFix;
};

// Minimised. `constant` is added to the term sum.
struct Objective {
  std::vector<Term> terms;
  int64_t constant = 0;
  std::string label;
};

// Index of an objective in the model's stack; lower index = higher priority.
using ObjectiveHandle = int;

class LinearModel {
 public:
  LinearModel() = default;
  LinearModel(int num_applicants, int num_companies);

  int AddVariable(const VariableRef& ref);
  void AddConstraint(LinearConstraint row);
  ObjectiveHandle AddObjective(Objective objective);
  // Removes every row with `tag`; returns how many were removed.
  int RemoveConstraints(RowTag tag);

  int num_vars() const { return static_cast<int>(vars_.size()); }
  const std::vector<VariableRef>& vars() const { return vars_; }
  const VariableRef& var(int v) const { return vars_[v]; }
  const std::vector<LinearConstraint>& constraints() const { return rows_; }
  const std::vector<Objective>& objectives() const { return objectives_; }
  int CountRows(RowTag tag) const;

  // Variable index of x_ij, or -1 when (i, j) is not an application.
  int match_var(int i, int j) const;
  int num_applicants() const { return num_applicants_; }
  int num_companies() const { return num_companies_; }

  // Whether builders drop rows that are implied by other rows or by variable
  // bounds. Never changes the feasible set of match variables.
  bool prune_vacuous() const { return prune_vacuous_; }
  void set_prune_vacuous(bool prune) { prune_vacuous_ = prune; }

  // Debug listing in an LP-like text form, one row per line.
  std::string Dump() const;
  std::string VarName(int v) const;

 private:
  int num_applicants_ = 0;
  int num_companies_ = 0;
  bool prune_vacuous_ = true;
  std::vector<VariableRef> vars_;
  std::vector<int> match_index_;
  std::vector<LinearConstraint> rows_;
  std::vector<Objective> objectives_;
};

// Row-by-row check of an assignment (one value per variable).
struct Evaluation {
  bool feasible = true;
  std::vector<int> violated_rows;
  std::vector<int64_t> objective_values;
};

Evaluation Evaluate(const LinearModel& model, std::span<const int64_t> values);

int64_t EvaluateObjective(const Objective& objective,
                          std::span<const int64_t> values);

}  // namespace quotamatch

#endif  // QUOTAMATCH_IPMODEL_LINEAR_MODEL_H_
