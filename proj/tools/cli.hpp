// Copyright 2026 The dpcolor Authors
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

#ifndef DPCOLOR_TOOLS_CLI_HPP_
#define DPCOLOR_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace dpcolor::tools {

inline constexpr int kExitOk = 0;        // verified / positive answer
inline constexpr int kExitNegative = 1;  // property violated or negative answer
inline constexpr int kExitUsage = 2;     // bad arguments, bad input, limits

// Runs one command line (without the program name). Nothing reaches `out`
// unless the command completes; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpcolor::tools

#endif  // DPCOLOR_TOOLS_CLI_HPP_
