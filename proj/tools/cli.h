// Copyright 2026 The hyperrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// The hyperrec command line, callable in-process. Exit codes: 0 success,
// 1 a verification gate failed, 2 usage error, 3 capacity or budget
// exceeded.

#ifndef HYPERREC_TOOLS_CLI_H_
#define HYPERREC_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperrec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitGateFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hyperrec::cli

#endif  // HYPERREC_TOOLS_CLI_H_
