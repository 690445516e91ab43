// Copyright 2026 The JohnSpace Authors
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

#ifndef JOHNSPACE_CLI_H_
#define JOHNSPACE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "johnspace/svg.h"

namespace johnspace {

// Exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitInputError = 2;

// Runs the tool on `args` (without the program name). JSON goes to the
// --out file when given and to `out` otherwise; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Figure for a report written by analyze, chain or qs. Throws DomainError
// for a report without a usable "domain".
SvgScene scene_from_report(const nlohmann::json& report);

}  // namespace johnspace

#endif  // JOHNSPACE_CLI_H_
