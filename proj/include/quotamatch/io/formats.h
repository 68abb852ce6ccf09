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

// On-disk formats.
//
// Instance file (line based, '#' starts a comment):
//
//   [types]
//   local
//   foreign
//   [applicants]
//   a1 foreign : c2 c1        # name, optional type, preferences
//   [companies]
//   c1 lower=4 upper=6 type_upper.foreign=2
//   [scores]
//   a1 c2 7.5                 # whole or half points
//   [global_quotas]
//   foreign 1 inf             # type, lower, upper
//
// Matching file: a [matching] section of "applicant company" lines, then a
// [diagnostics] section of "key value..." lines that can be recomputed from
// the pairs and the instance.

#ifndef QUOTAMATCH_IO_FORMATS_H_
#define QUOTAMATCH_IO_FORMATS_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "quotamatch/core/diagnostics.h"
#include "quotamatch/core/instance.h"
#include "quotamatch/core/matching.h"
#include "quotamatch/pipelines/pipelines.h"

namespace quotamatch {

// "7", "7.0", "7.5" -> 14, 14, 15. Anything else is rejected.
absl::StatusOr<Score> ParseHalfPoints(std::string_view text);
std::string FormatHalfPoints(Score doubled);

// Errors are InvalidArgument "line N: ...". The result is not validated;
// run ValidateInstance() for the semantic checks.
absl::StatusOr<Instance> ParseInstance(std::string_view text);
std::string EmitInstance(const Instance& inst);

absl::StatusOr<std::string> ReadFile(const std::string& path);

// Matching document as written by the CLI.
struct MatchingDocument {
  // Lines before the first section ("concept", "status", ...), key -> rest.
  std::map<std::string, std::string> header;
  std::vector<std::pair<std::string, std::string>> pairs;
  // Raw diagnostics lines, key -> rest of the line.
  std::map<std::string, std::string> diagnostics;
};

absl::StatusOr<MatchingDocument> ParseMatchingDocument(std::string_view text);

// Resolves names; unknown applicants or companies are reported as
// InvalidArgument "UnknownAssignment: ...", as are repeated applicants.
absl::StatusOr<Matching> ResolveMatching(const Instance& inst,
                                         const MatchingDocument& doc);

// key -> value lines for the diagnostics block, in a fixed order.
std::vector<std::pair<std::string, std::string>> DiagnosticLines(
    const Instance& inst, const Diagnostics& d);

std::string EmitMatchingFile(const Instance& inst, const SolveReport& report);

// One JSON object per report.
std::string EmitRecords(const Instance& inst,
                        std::span<const SolveReport> reports);

// Parses a matching written as JSON records (first record only).
absl::StatusOr<MatchingDocument> ParseMatchingRecords(std::string_view text);

// Quota overrides named by the document's concept line, if any.
absl::StatusOr<SolutionConcept> DocumentConcept(const MatchingDocument& doc);

// Lines of the document's diagnostics block that differ from the values
// recomputed for `m`; each entry reads "key: file says X, recomputed Y".
std::vector<std::string> DiagnosticDiscrepancies(const Instance& inst,
                                                 const Matching& m,
                                                 const MatchingDocument& doc);

}  // namespace quotamatch

#endif  // QUOTAMATCH_IO_FORMATS_H_
