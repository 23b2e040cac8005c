// Copyright 2026 The qalloc Authors
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

#ifndef QALLOC_CLI_HPP
#define QALLOC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qalloc::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kUsageError = 2,  // also: enumeration budget exceeded
  kDiscrepancy = 3,
};

/// Runs the `qalloc` command line. args[0] is the program name. Reports go
/// to `out` (JSON unless --pretty), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qalloc::cli

#endif  // QALLOC_CLI_HPP
