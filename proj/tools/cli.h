// Copyright 2026 The sumgraph Authors.
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

#ifndef SUMGRAPH_TOOLS_CLI_H_
#define SUMGRAPH_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace sumgraph::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitCorpus = 3;

// Runs the command line `args` (args[0] is the program name), writing
// results to `out` and diagnostics to `err`. Returns the exit code.
int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace sumgraph::cli

#endif  // SUMGRAPH_TOOLS_CLI_H_
