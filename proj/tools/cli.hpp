// Copyright 2026 The mompoly Authors
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

#ifndef MOMPOLY_TOOLS_CLI_HPP_
#define MOMPOLY_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mompoly::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kBudget = 3,
};

// Runs the command line `args` (without the program name). Reports go to
// `out`, diagnostics to `err`. `cache_env` stands in for MOMPOLY_CACHE.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& cache_env = "");

}  // namespace mompoly::cli

#endif  // MOMPOLY_TOOLS_CLI_HPP_
