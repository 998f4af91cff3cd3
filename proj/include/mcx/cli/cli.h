// Copyright 2026 The mcx Authors
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

#ifndef MCX_CLI_CLI_H_
#define MCX_CLI_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace mcx::cli {

// Exit codes. `run` maps outcomes onto them; the other commands use
// kOk, kFindings/kWarnings and kUsage.
inline constexpr int kOk = 0;
inline constexpr int kFault = 1;
inline constexpr int kBlocked = 2;
inline constexpr int kWarnings = 2;
inline constexpr int kFindings = 3;
inline constexpr int kUsage = 4;
inline constexpr int kStepLimit = 5;

// Runs `mcx <args...>` (without the program name). Reports go to `out`,
// diagnostics to `err`.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace mcx::cli

#endif  // MCX_CLI_CLI_H_
