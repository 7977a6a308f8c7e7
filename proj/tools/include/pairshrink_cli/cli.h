// Copyright 2026 The Pairshrink Authors.
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


// The pairshrink command-line front end. Exposed as a function so tests can
// drive it without spawning processes.

#ifndef PAIRSHRINK_CLI_CLI_H_
#define PAIRSHRINK_CLI_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace pairshrink::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      // usage, parse and data errors
inline constexpr int kExitNumerical = 3;  // fit or linear-algebra failure

// Runs one invocation. args[0] is the program name. Results go to `out`
// unless --out names a file; diagnostics and summaries go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pairshrink::cli

#endif  // PAIRSHRINK_CLI_CLI_H_
