// Copyright 2026 The szx Authors
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

#ifndef SZX_TOOLS_CLI_HPP
#define SZX_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace szx {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `szx` command line on `args` (without the program name). The
/// JSON report goes to `out` unless --out names a file; diagnostics go to
/// `err`. Returns 0 on success, 1 when a check fails, 2 on usage or input
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace szx

#endif  // SZX_TOOLS_CLI_HPP
