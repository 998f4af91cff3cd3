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

#ifndef MCX_SYNTAX_VALIDATE_H_
#define MCX_SYNTAX_VALIDATE_H_

#include <string>
#include <vector>

#include "mcx/syntax/ast.h"

namespace mcx {

enum class Severity { kError, kWarning };

struct Finding {
  Severity severity = Severity::kWarning;
  std::string code;
  // "S" for a location or column, "S->A" for a gate.
  std::string site;
  std::string message;

  // `<severity> <code> <site>: <message>`
  std::string ToString() const;
  bool operator==(const Finding&) const = default;
};

std::string GateSite(const CodeMatrix& matrix, const GateDecl& gate);

// Lints a parsed matrix. Findings are data: gates are reported in
// declaration order, followed by per-location findings.
//
//   GUARDS-FIRST-VIOLATION  an assignment precedes a guard in one gate
//   TODO-GATE               the gate body is still a placeholder
//   GATE-FROM-HALT          the halt column is never executed
//   GATE-INTO-START         a gate re-enters the start location
//   EMPTY-COLUMN            a non-halt location has no outgoing gate
std::vector<Finding> Validate(const CodeMatrix& matrix);

}  // namespace mcx

#endif  // MCX_SYNTAX_VALIDATE_H_
