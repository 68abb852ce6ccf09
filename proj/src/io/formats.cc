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

#include "quotamatch/io/formats.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "nlohmann/json.hpp"

namespace quotamatch {
namespace {

using Tokens = std::vector<std::string>;

absl::string_view Av(std::string_view s) { return {s.data(), s.size()}; }

Tokens Split(absl::string_view line) {
  return absl::StrSplit(line, absl::ByAnyChar(" \t"), absl::SkipEmpty());
}

absl::Status LineError(int line, absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", message));
}

// Lines with comments and surrounding blanks removed; empty lines dropped.
struct Line {
  int number;
  std::string text;
};

std::vector<Line> CleanLines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  for (absl::string_view raw : absl::StrSplit(Av(text), '\n')) {
    ++number;
    const size_t hash = raw.find('#');
    // '#' starts a comment only at the start of a line or after blank space,
    // so that concept names such as Min#E survive.
    absl::string_view body = raw;
    for (size_t p = hash; p != absl::string_view::npos; p = raw.find('#', p + 1)) {
      if (p == 0 || raw[p - 1] == ' ' || raw[p - 1] == '\t') {
        body = raw.substr(0, p);
        break;
      }
    }
    body = absl::StripAsciiWhitespace(body);
    if (!body.empty()) out.push_back({number, std::string(body)});
  }
  return out;
}

bool IsSection(const std::string& text, std::string* name) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    return false;
  }
  *name = text.substr(1, text.size() - 2);
  return true;
}

absl::StatusOr<int> ParseCount(absl::string_view text, int line,
                               absl::string_view field) {
  int value = 0;
  if (!absl::SimpleAtoi(text, &value)) {
    return LineError(line, absl::StrCat(field, ": expected an integer, got '",
                                        text, "'"));
  }
  return value;
}

std::string QuotaText(int value) {
  return value == kUnbounded ? "inf" : absl::StrCat(value);
}

}  // namespace

absl::StatusOr<Score> ParseHalfPoints(std::string_view raw) {
  absl::string_view text = Av(raw);
  bool negative = absl::ConsumePrefix(&text, "-");
  std::pair<absl::string_view, absl::string_view> parts =
      absl::StrSplit(text, absl::MaxSplits('.', 1));
  int64_t whole = 0;
  if (parts.first.empty() || !absl::SimpleAtoi(parts.first, &whole) ||
      absl::StartsWith(parts.first, "+") || absl::StartsWith(parts.first, "-")) {
    return absl::InvalidArgumentError(
        absl::StrCat("score '", Av(raw), "' is not a number"));
  }
  const bool has_dot = text.find('.') != absl::string_view::npos;
  const absl::string_view frac = parts.second;
  if (has_dot && frac.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("score '", Av(raw), "' is not a number"));
  }
  int half = 0;
  if (!frac.empty()) {
    const bool zeros = frac.find_first_not_of('0') == absl::string_view::npos;
    const bool five =
        frac[0] == '5' && frac.find_first_not_of('0', 1) == absl::string_view::npos;
    if (!zeros && !five) {
      return absl::InvalidArgumentError(absl::StrCat(
          "score '", Av(raw), "' must be a whole or half point (.0 or .5)"));
    }
    half = five ? 1 : 0;
  }
  const Score doubled = 2 * whole + half;
  return negative ? -doubled : doubled;
}

std::string FormatHalfPoints(Score doubled) {
  const char* sign = doubled < 0 ? "-" : "";
  const Score mag = doubled < 0 ? -doubled : doubled;
  if (mag % 2 == 0) return absl::StrCat(sign, mag / 2);
  return absl::StrCat(sign, mag / 2, ".5");
}

absl::StatusOr<Instance> ParseInstance(std::string_view text) {
  struct RawApplicant {
    int line;
    std::string name;
    std::string type;
    Tokens prefs;
  };
  struct RawScore {
    int line;
    std::string applicant;
    std::string company;
    Score score;
  };
  std::vector<std::string> types;
  std::vector<RawApplicant> raw_applicants;
  std::vector<Company> companies;
  std::vector<std::pair<int, Tokens>> company_quota_tokens;
  std::vector<RawScore> raw_scores;
  std::vector<std::pair<int, Tokens>> global_rows;

  std::string section;
  for (const Line& line : CleanLines(text)) {
    std::string name;
    if (IsSection(line.text, &name)) {
      if (name != "types" && name != "applicants" && name != "companies" &&
          name != "scores" && name != "global_quotas") {
        return LineError(line.number,
                         absl::StrCat("unknown section [", name, "]"));
      }
      section = name;
      continue;
    }
    const Tokens tok = Split(line.text);
    if (section.empty()) {
      return LineError(line.number, "content before the first section");
    }
    if (section == "types") {
      if (tok.size() != 1) {
        return LineError(line.number, "types: one name per line");
      }
      types.push_back(tok[0]);
    } else if (section == "applicants") {
      const auto colon = std::find(tok.begin(), tok.end(), ":");
      if (colon == tok.end()) {
        return LineError(line.number,
                         "applicants: expected 'name [type] : companies...'");
      }
      const size_t head = colon - tok.begin();
      if (head < 1 || head > 2) {
        return LineError(line.number,
                         "applicants: expected 'name [type] : companies...'");
      }
      raw_applicants.push_back({line.number, tok[0], head == 2 ? tok[1] : "",
                                Tokens(colon + 1, tok.end())});
    } else if (section == "companies") {
      Company c;
      c.name = tok[0];
      companies.push_back(c);
      company_quota_tokens.push_back({line.number, Tokens(tok.begin() + 1, tok.end())});
    } else if (section == "scores") {
      if (tok.size() != 3) {
        return LineError(line.number,
                         "scores: expected 'applicant company score'");
      }
      absl::StatusOr<Score> s = ParseHalfPoints(tok[2]);
      if (!s.ok()) {
        return LineError(line.number,
                         absl::StrCat("score field: ", s.status().message()));
      }
      raw_scores.push_back({line.number, tok[0], tok[1], *s});
    } else {
      if (tok.size() != 3) {
        return LineError(line.number,
                         "global_quotas: expected 'type lower upper'");
      }
      global_rows.push_back({line.number, tok});
    }
  }
  if (types.empty()) types.push_back("all");
  auto type_index = [&](const std::string& name) -> int {
    const auto it = std::find(types.begin(), types.end(), name);
    return it == types.end() ? -1 : static_cast<int>(it - types.begin());
  };
  auto company_index = [&](const std::string& name) -> int {
    for (size_t j = 0; j < companies.size(); ++j) {
      if (companies[j].name == name) return static_cast<int>(j);
    }
    return -1;
  };
  for (size_t j = 0; j < companies.size(); ++j) {
    if (company_index(companies[j].name) != static_cast<int>(j)) {
      return LineError(company_quota_tokens[j].first,
                       absl::StrCat("duplicate company '", companies[j].name, "'"));
    }
  }

  const int p = static_cast<int>(types.size());
  for (size_t j = 0; j < companies.size(); ++j) {
    Company& c = companies[j];
    const int line = company_quota_tokens[j].first;
    bool has_upper = false;
    std::vector<int> tl(p, 0), tu(p, -1);
    bool typed = false;
    for (const std::string& item : company_quota_tokens[j].second) {
      std::pair<std::string, std::string> kv =
          absl::StrSplit(item, absl::MaxSplits('=', 1));
      absl::StatusOr<int> value = ParseCount(kv.second, line, kv.first);
      if (!value.ok()) return value.status();
      if (kv.first == "lower") {
        c.lower = *value;
      } else if (kv.first == "upper") {
        c.upper = *value;
        has_upper = true;
      } else if (absl::StartsWith(kv.first, "type_lower.") ||
                 absl::StartsWith(kv.first, "type_upper.")) {
        const std::string tname = kv.first.substr(11);
        const int k = type_index(tname);
        if (k < 0) {
          return LineError(line, absl::StrCat(kv.first, ": unknown type '",
                                              tname, "'"));
        }
        (kv.first[5] == 'l' ? tl : tu)[k] = *value;
        typed = true;
      } else {
        return LineError(line, absl::StrCat("companies: unknown field '",
                                            kv.first, "'"));
      }
    }
    if (!has_upper) {
      return LineError(line, absl::StrCat("company '", c.name,
                                          "' needs upper=<seats>"));
    }
    if (typed) {
      for (int& u : tu) {
        if (u < 0) u = c.upper;
      }
      c.type_lower = tl;
      c.type_upper = tu;
    }
  }

  std::vector<Applicant> applicants;
  for (const RawApplicant& ra : raw_applicants) {
    Applicant a;
    a.name = ra.name;
    if (!ra.type.empty()) {
      a.type = type_index(ra.type);
      if (a.type < 0) {
        return LineError(ra.line,
                         absl::StrCat("applicant type: unknown type '", ra.type, "'"));
      }
    }
    for (const std::string& cname : ra.prefs) {
      const int j = company_index(cname);
      if (j < 0) {
        return LineError(ra.line, absl::StrCat("preferences: unknown company '",
                                               cname, "'"));
      }
      a.preferences.push_back(j);
    }
    applicants.push_back(std::move(a));
  }
  auto applicant_index = [&](const std::string& name) -> int {
    for (size_t i = 0; i < applicants.size(); ++i) {
      if (applicants[i].name == name) return static_cast<int>(i);
    }
    return -1;
  };
  for (size_t i = 0; i < applicants.size(); ++i) {
    if (applicant_index(applicants[i].name) != static_cast<int>(i)) {
      return LineError(raw_applicants[i].line,
                       absl::StrCat("duplicate applicant '", applicants[i].name, "'"));
    }
  }
  std::vector<Application> apps;
  for (const RawScore& rs : raw_scores) {
    const int i = applicant_index(rs.applicant);
    const int j = company_index(rs.company);
    if (i < 0) {
      return LineError(rs.line, absl::StrCat("scores: unknown applicant '",
                                             rs.applicant, "'"));
    }
    if (j < 0) {
      return LineError(rs.line, absl::StrCat("scores: unknown company '",
                                             rs.company, "'"));
    }
    apps.push_back({i, j, 0, rs.score});
  }

  std::vector<int> glower, gupper;
  if (!global_rows.empty()) {
    glower.assign(p, 0);
    gupper.assign(p, kUnbounded);
    for (const auto& [line, tok] : global_rows) {
      const int k = type_index(tok[0]);
      if (k < 0) {
        return LineError(line, absl::StrCat("global_quotas: unknown type '",
                                            tok[0], "'"));
      }
      absl::StatusOr<int> lo = ParseCount(tok[1], line, "global lower");
      if (!lo.ok()) return lo.status();
      glower[k] = *lo;
      if (tok[2] != "inf") {
        absl::StatusOr<int> hi = ParseCount(tok[2], line, "global upper");
        if (!hi.ok()) return hi.status();
        gupper[k] = *hi;
      }
    }
  }
  return Instance(types, std::move(applicants), std::move(companies),
                  std::move(apps), std::move(glower), std::move(gupper));
}

std::string EmitInstance(const Instance& inst) {
  std::string out = "[types]\n";
  for (const std::string& t : inst.type_names()) absl::StrAppend(&out, t, "\n");
  out += "\n[applicants]\n";
  for (const Applicant& a : inst.applicants()) {
    absl::StrAppend(&out, a.name, " ", inst.type_name(a.type), " :");
    for (int j : a.preferences) absl::StrAppend(&out, " ", inst.company(j).name);
    out += "\n";
  }
  out += "\n[companies]\n";
  for (int j = 0; j < inst.num_companies(); ++j) {
    const Company& c = inst.company(j);
    absl::StrAppend(&out, c.name, " lower=", c.lower, " upper=", c.upper);
    for (int k = 0; k < inst.num_types(); ++k) {
      if (inst.type_lower(j, k) != 0) {
        absl::StrAppend(&out, " type_lower.", inst.type_name(k), "=",
                        inst.type_lower(j, k));
      }
    }
    for (int k = 0; k < inst.num_types(); ++k) {
      if (inst.type_upper(j, k) != c.upper) {
        absl::StrAppend(&out, " type_upper.", inst.type_name(k), "=",
                        inst.type_upper(j, k));
      }
    }
    out += "\n";
  }
  out += "\n[scores]\n";
  for (int i = 0; i < inst.num_applicants(); ++i) {
    for (int a : inst.applications_of(i)) {
      const Application& app = inst.application(a);
      absl::StrAppend(&out, inst.applicant(i).name, " ",
                      inst.company(app.company).name, " ",
                      FormatHalfPoints(app.score), "\n");
    }
  }
  bool any_global = false;
  for (int k = 0; k < inst.num_types(); ++k) {
    any_global |= inst.global_lower(k) != 0 || inst.global_upper(k) != kUnbounded;
  }
  if (any_global) {
    out += "\n[global_quotas]\n";
    for (int k = 0; k < inst.num_types(); ++k) {
      if (inst.global_lower(k) == 0 && inst.global_upper(k) == kUnbounded) {
        continue;
      }
      absl::StrAppend(&out, inst.type_name(k), " ", inst.global_lower(k), " ",
                      QuotaText(inst.global_upper(k)), "\n");
    }
  }
  return out;
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

absl::StatusOr<MatchingDocument> ParseMatchingDocument(std::string_view text) {
  MatchingDocument doc;
  std::string section;
  for (const Line& line : CleanLines(text)) {
    std::string name;
    if (IsSection(line.text, &name)) {
      if (name != "matching" && name != "diagnostics") {
        return LineError(line.number,
                         absl::StrCat("unknown section [", name, "]"));
      }
      section = name;
      continue;
    }
    const Tokens tok = Split(line.text);
    if (section.empty()) {
      std::vector<std::string> rest(tok.begin() + 1, tok.end());
      doc.header[tok[0]] = absl::StrJoin(rest, " ");
      continue;
    }
    if (section == "matching") {
      if (tok.size() != 2) {
        return LineError(line.number, "matching: expected 'applicant company'");
      }
      doc.pairs.push_back({tok[0], tok[1]});
    } else {
      std::vector<std::string> rest(tok.begin() + 1, tok.end());
      doc.diagnostics[tok[0]] = absl::StrJoin(rest, " ");
    }
  }
  return doc;
}

absl::StatusOr<Matching> ResolveMatching(const Instance& inst,
                                         const MatchingDocument& doc) {
  Matching m(inst.num_applicants());
  for (const auto& [a, c] : doc.pairs) {
    const int i = inst.FindApplicant(a);
    const int j = inst.FindCompany(c);
    if (i < 0 || j < 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "UnknownAssignment: ", a, "/", c, " names ",
          i < 0 ? "an unknown applicant" : "an unknown company"));
    }
    if (m.is_matched(i)) {
      return absl::InvalidArgumentError(
          absl::StrCat("UnknownAssignment: ", a, " is assigned twice"));
    }
    m.Assign(i, j);
  }
  return m;
}

std::vector<std::pair<std::string, std::string>> DiagnosticLines(
    const Instance& inst, const Diagnostics& d) {
  std::vector<std::pair<std::string, std::string>> out = {
      {"matched", absl::StrCat(d.matched)},
      {"unmatched", absl::StrCat(d.unmatched)},
      {"complete", d.complete ? "yes" : "no"},
      {"total_rank", absl::StrCat(d.total_rank)},
      {"within_type_envies", absl::StrCat(d.within_type_envies)},
      {"within_type_intensity", FormatHalfPoints(d.within_type_intensity)},
      {"cross_type_envies", absl::StrCat(d.cross_type_envies)},
      {"cross_type_intensity", FormatHalfPoints(d.cross_type_intensity)},
      {"blocking_pairs", absl::StrCat(d.blocking_pairs)},
      {"open_slot_blockings", absl::StrCat(d.open_slot_blockings)},
  };
  for (int j = 0; j < inst.num_companies(); ++j) {
    std::string row = absl::StrCat(d.fill[j]);
    for (int k = 0; k < inst.num_types(); ++k) {
      absl::StrAppend(&row, " ", d.type_profile[j][k]);
    }
    out.push_back({absl::StrCat("profile.", inst.company(j).name), row});
  }
  return out;
}

std::string EmitMatchingFile(const Instance& inst, const SolveReport& r) {
  std::string out = absl::StrCat("concept ", DescribeConcept(r.concept_), "\n",
                                 "status ", Av(ReportStatusName(r.status)), "\n");
  absl::StrAppend(&out, "instance ", absl::Hex(r.instance_hash, absl::kZeroPad16),
                  "\n");
  if (!r.infeasible_stage.empty()) {
    absl::StrAppend(&out, "infeasible_stage ", r.infeasible_stage, "\n");
  }
  for (size_t k = 0; k < r.objective_values.size(); ++k) {
    absl::StrAppend(&out, "objective ", r.objective_labels[k], " ",
                    r.objective_values[k], "\n");
  }
  if (!r.bonus.empty()) {
    out += "bonus";
    for (size_t k = 0; k < r.bonus.size(); ++k) {
      absl::StrAppend(&out, " ", inst.type_name(k), "=",
                      FormatHalfPoints(r.bonus[k]));
    }
    absl::StrAppend(&out, "\ntie_break ", r.tie_break, "\n");
  }
  absl::StrAppend(&out, "nodes ", r.stats.nodes, "\n");
  if (!r.has_matching) return out;
  const Instance eval = ApplyOverrides(inst, r.concept_);
  out += "\n[matching]\n";
  for (const auto& [i, j] : r.matching.Pairs()) {
    absl::StrAppend(&out, eval.applicant(i).name, " ", eval.company(j).name,
                    "\n");
  }
  out += "\n[diagnostics]\n";
  for (const auto& [key, value] : DiagnosticLines(eval, r.diagnostics)) {
    absl::StrAppend(&out, key, " ", value, "\n");
  }
  return out;
}

std::string EmitRecords(const Instance& inst,
                        std::span<const SolveReport> reports) {
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const SolveReport& r : reports) {
    nlohmann::ordered_json rec;
    rec["concept"] = DescribeConcept(r.concept_);
    rec["status"] = std::string(ReportStatusName(r.status));
    rec["instance"] = absl::StrCat(absl::Hex(r.instance_hash, absl::kZeroPad16));
    if (!r.infeasible_stage.empty()) rec["infeasible_stage"] = r.infeasible_stage;
    if (!r.message.empty()) rec["message"] = r.message;
    nlohmann::ordered_json objectives = nlohmann::ordered_json::object();
    for (size_t k = 0; k < r.objective_values.size(); ++k) {
      objectives[r.objective_labels[k]] = r.objective_values[k];
    }
    rec["objectives"] = objectives;
    if (!r.bonus.empty()) {
      nlohmann::ordered_json bonus = nlohmann::ordered_json::object();
      for (size_t k = 0; k < r.bonus.size(); ++k) {
        bonus[inst.type_name(k)] = FormatHalfPoints(r.bonus[k]);
      }
      rec["bonus"] = bonus;
      rec["tie_break"] = r.tie_break;
    }
    rec["nodes"] = r.stats.nodes;
    if (r.has_matching) {
      const Instance eval = ApplyOverrides(inst, r.concept_);
      nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
      for (const auto& [i, j] : r.matching.Pairs()) {
        pairs.push_back({eval.applicant(i).name, eval.company(j).name});
      }
      rec["matching"] = pairs;
      nlohmann::ordered_json diag = nlohmann::ordered_json::object();
      for (const auto& [key, value] : DiagnosticLines(eval, r.diagnostics)) {
        diag[key] = value;
      }
      rec["diagnostics"] = diag;
    }
    all.push_back(rec);
  }
  return all.dump(2) + "\n";
}

absl::StatusOr<MatchingDocument> ParseMatchingRecords(std::string_view text) {
  const nlohmann::json parsed =
      nlohmann::json::parse(text.begin(), text.end(), nullptr, false);
  if (parsed.is_discarded()) {
    return absl::InvalidArgumentError("records: not valid JSON");
  }
  const nlohmann::json& rec = parsed.is_array() && !parsed.empty() ? parsed[0] : parsed;
  if (!rec.is_object()) {
    return absl::InvalidArgumentError("records: expected an object");
  }
  MatchingDocument doc;
  for (const char* key : {"concept", "status", "instance"}) {
    if (rec.contains(key) && rec[key].is_string()) {
      doc.header[key] = rec[key].get<std::string>();
    }
  }
  if (rec.contains("matching")) {
    for (const auto& pair : rec["matching"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string()) {
        return absl::InvalidArgumentError(
            "records: matching entries must be [applicant, company]");
      }
      doc.pairs.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
    }
  }
  if (rec.contains("diagnostics")) {
    for (const auto& [key, value] : rec["diagnostics"].items()) {
      doc.diagnostics[key] = value.is_string() ? value.get<std::string>()
                                               : value.dump();
    }
  }
  return doc;
}

absl::StatusOr<SolutionConcept> DocumentConcept(const MatchingDocument& doc) {
  const auto it = doc.header.find("concept");
  if (it == doc.header.end()) return SolutionConcept{};
  // Flags such as "strict" follow the name; only overrides matter here.
  const std::string name = it->second.substr(0, it->second.find(' '));
  return ParseConcept(name);
}

std::vector<std::string> DiagnosticDiscrepancies(const Instance& inst,
                                                 const Matching& m,
                                                 const MatchingDocument& doc) {
  const auto lines = DiagnosticLines(inst, ComputeDiagnostics(inst, m));
  std::vector<std::string> out;
  for (const auto& [key, value] : lines) {
    const auto it = doc.diagnostics.find(key);
    if (it == doc.diagnostics.end()) continue;
    if (it->second != value) {
      out.push_back(absl::StrCat(key, ": file says ", it->second,
                                 ", recomputed ", value));
    }
  }
  for (const auto& entry : doc.diagnostics) {
    const bool known =
        std::any_of(lines.begin(), lines.end(),
                    [&](const auto& line) { return line.first == entry.first; });
    if (!known) out.push_back(absl::StrCat(entry.first, ": unknown diagnostic"));
  }
  return out;
}

}  // namespace quotamatch
