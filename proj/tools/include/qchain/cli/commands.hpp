// Copyright 2026 The qchain Authors
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


#ifndef QCHAIN_CLI_COMMANDS_HPP_
#define QCHAIN_CLI_COMMANDS_HPP_

#include <ostream>
#include <span>
#include <string>

namespace qchain::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRuntime = 1,
  kExitConstraint = 2,
};

/// Runs `qchain <command> --config <path> [--seed N] [--out <path>] [--quiet]`.
/// `args` excludes the program name. Report records go to --out when given,
/// otherwise to `out`; diagnostics go to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qchain::cli

#endif  // QCHAIN_CLI_COMMANDS_HPP_
