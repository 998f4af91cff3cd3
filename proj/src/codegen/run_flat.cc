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

#include "mcx/machine/gate.h"

namespace mcx {
namespace {

bool GuardsHold(const FlatBranch& branch, const DataState& state) {
  for (const auto& guard : branch.guards) {
    if (!std::get<bool>(EvalExpr(*guard, state))) return false;
  }
  return true;
}

// Runs the branch's assignments; rolls back and rethrows on a fault.
void Execute(const FlatBranch& branch, DataState& state) {
  StateTransaction txn(state);
  for (const auto& assign : branch.assignments) txn.Assign(assign);
  txn.Commit();
}

}  // namespace

RunResult RunFlat(const FlatProgram& program, const DataState& initial,
                  const RunOptions& options) {
  MachineDriver driver;
  driver.env = {&program.predicates, &program.locations};
  driver.start = program.start_code;
  driver.halt = program.halt_code;
  driver.step = [&program](int code, DataState& state) {
    CycleStep step;
    try {
      for (const auto& branch : program.states[code].branches) {
        if (!GuardsHold(branch, state)) continue;
        step.gate = branch.gate;
        Execute(branch, state);
        step.status = GateStatus::kPass;
        step.target = branch.next;
        return step;
      }
    } catch (const FaultError& e) {
      step.status = GateStatus::kFault;
      step.fault = e.fault();
      return step;
    }
    step.status = GateStatus::kBlocked;
    step.gate = -1;
    return step;
  };
  driver.overlaps = [&program](int code, int selected,
                               const DataState& before) {
    std::vector<int> others;
    bool later = false;
    DataState scratch = before;
    for (const auto& branch : program.states[code].branches) {
      if (branch.gate == selected) {
        later = true;
        continue;
      }
      if (!later) continue;
      try {
        if (!GuardsHold(branch, scratch)) continue;
        Execute(branch, scratch);
        others.push_back(branch.gate);
        scratch = before;
      } catch (const FaultError&) {
        // Faulting is not passing.
      }
    }
    return others;
  };
  return DriveRun(driver, initial, options);
}

RunResult RunFlat(const FlatProgram& program, const RunInputs& inputs,
                  const RunOptions& options) {
  return RunFlat(program, BindInputs(program.variables, inputs), options);
}

}  // namespace mcx
