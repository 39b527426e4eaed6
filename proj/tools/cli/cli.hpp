// Copyright 2026 The goqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GOQEC_TOOLS_CLI_HPP_
#define GOQEC_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace goqec::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs one goqec command. `args[0]` is the program name. Reports go to `out`
/// (or the --out file), diagnostics to `err`.
///
/// Exit codes: 0 condition holds / operation succeeded, 1 condition checked
/// and false (the report carries a witness), 2 input could not be checked.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace goqec::cli

#endif  // GOQEC_TOOLS_CLI_HPP_
