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

#include "mcx/codegen/flat.h"

namespace mcx {

FlatProgram Lower(const CodeMatrix& matrix) {
  for (const auto& finding : Validate(matrix)) {
    if (finding.code == "TODO-GATE" ||
        finding.code == "GUARDS-FIRST-VIOLATION") {
      throw NotLowerableError(finding);
    }
  }

  FlatProgram program;
  program.name = matrix.name;
  program.variables = matrix.variables;
  program.predicates = matrix.predicates;
  program.locations = matrix.locations;
  program.start_code = matrix.start;
  program.halt_code = matrix.halt;
  for (int code = 0; code < static_cast<int>(matrix.locations.size());
       ++code) {
    FlatState state{matrix.locations[code].id, code, {}};
    if (code != matrix.halt) {
      for (int index : matrix.Column(code)) {
        const GateDecl& gate = matrix.gates[index];
        FlatBranch branch;
        branch.next = gate.target;
        branch.gate = index;
        for (const auto& step : gate.steps) {
          if (const auto* guard = std::get_if<GuardStep>(&step)) {
            branch.guards.push_back(guard->condition);
          } else {
            branch.assignments.push_back(std::get<AssignStep>(step));
          }
        }
        state.branches.push_back(std::move(branch));
      }
    }
    program.states.push_back(std::move(state));
  }
  return program;
}

}  // namespace mcx
