/*
   Copyright 2026 The extremal-designs Authors

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

#ifndef EXTREMAL_CLI_HPP
#define EXTREMAL_CLI_HPP

#include <iosfwd>

namespace extremal {

/// Exit codes: 0 success (including "nonexistent" answers), 1 computation-range refusal, 2 usage error.
enum ExitCode : int { kExitOk = 0, kExitRange = 1, kExitUsage = 2, kExitInternal = 3 };

/// Entry point of the `extremal` command line tool, with injectable streams for testing.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace extremal

#endif
