// Copyright 2026 The gpd Authors
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

#ifndef GPD_TOOLS_CLI_APP_HPP
#define GPD_TOOLS_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gpd::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kParseError = 2;
inline constexpr int kSemanticError = 3;
inline constexpr int kInternalError = 4;

/// Runs one invocation.  `args` excludes the program name.  Reports go to
/// `out`, diagnostics to `err`; `in` backs the "-" file argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gpd::cli

#endif  // GPD_TOOLS_CLI_APP_HPP
