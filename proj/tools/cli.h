// Copyright 2026 The icsim Authors
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


#ifndef ICSIM_TOOLS_CLI_H_
#define ICSIM_TOOLS_CLI_H_

#include <iosfwd>
#include <span>

namespace icsim::cli {

// Process exit codes, one per failure class.
enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kIo = 2,
  kQuery = 3,
  kEvaluation = 4,
};

// Runs `icsim <subcommand> ...`; argv[0] is the program name.
int Run(std::span<const char* const> argv, std::ostream& out,
        std::ostream& err);

}  // namespace icsim::cli

#endif  // ICSIM_TOOLS_CLI_H_
