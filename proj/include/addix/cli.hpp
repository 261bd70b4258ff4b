/*
   Copyright 2026 The addix Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ADDIX_CLI_HPP
#define ADDIX_CLI_HPP

#include <ostream>

namespace addix::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kPreconditionError = 2,
    kInvariantViolation = 3,
};

/// Runs the addix command line. Results go to `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace addix::cli

#endif
