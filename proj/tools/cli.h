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

#ifndef QUOTAMATCH_TOOLS_CLI_H_
#define QUOTAMATCH_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace quotamatch {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitInvalid = 3;  // parse, validation or check failure
inline constexpr int kExitLimit = 4;    // node/time limit, enumeration budget

// Runs one command. `args` excludes the program name. The result document
// goes to `out`, everything else to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace quotamatch

#endif  // QUOTAMATCH_TOOLS_CLI_H_
