// Copyright 2026 The qwmix Authors
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

#ifndef QWMIX_CLI_CLI_HPP
#define QWMIX_CLI_CLI_HPP

#include <iosfwd>

namespace qwmix::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, input_error = 2, internal_error = 3 };

/// Entry point of the command-line tool, with the streams injectable for
/// testing. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwmix::cli

#endif  // QWMIX_CLI_CLI_HPP
