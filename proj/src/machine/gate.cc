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

#include "mcx/machine/gate.h"

#include <fmt/core.h>

namespace mcx {

void StateTransaction::Assign(const AssignStep& assign) {
  int64_t index = 0;
  if (assign.index) index = EvalInt(*assign.index, state_);
  int64_t value = EvalInt(*assign.value, state_);
  if (!assign.index) {
    int64_t& slot = state_.scalars[assign.binding.slot];
    log_.push_back({false, assign.binding.slot, 0, slot});
    slot = value;
    return;
  }
  auto& array = state_.arrays[assign.binding.slot];
  if (index < 0 || index >= static_cast<int64_t>(array.size())) {
    throw FaultError(Fault{
        FaultKind::kIndexOutOfBounds,
        fmt::format("{}[{}] with length {} in '{}'", assign.target, index,
                    array.size(), FormatAssign(assign))});
  }
  log_.push_back({true, assign.binding.slot, static_cast<size_t>(index),
                  array[index]});
  array[index] = value;
}

void StateTransaction::Rollback() {
  for (auto it = log_.rbegin(); it != log_.rend(); ++it) {
    if (it->is_array) {
      state_.arrays[it->slot][it->index] = it->old_value;
    } else {
      state_.scalars[it->slot] = it->old_value;
    }
  }
  log_.clear();
}

GateStatus ApplyGateInPlace(const GateDecl& gate, DataState& state,
                            std::optional<Fault>& fault) {
  StateTransaction txn(state);
  try {
    for (const auto& step : gate.steps) {
      if (const auto* guard = std::get_if<GuardStep>(&step)) {
        if (!std::get<bool>(EvalExpr(*guard->condition, state))) {
          return GateStatus::kBlocked;
        }
      } else if (const auto* assign = std::get_if<AssignStep>(&step)) {
        txn.Assign(*assign);
      } else {
        throw FaultError(Fault{FaultKind::kTodoExecuted,
                               std::get<TodoStep>(step).note});
      }
    }
  } catch (const FaultError& e) {
    fault = e.fault();
    return GateStatus::kFault;
  }
  txn.Commit();
  return GateStatus::kPass;
}

GateOutcome ApplyGate(const GateDecl& gate, const DataState& state) {
  GateOutcome out;
  out.state = state;
  out.status = ApplyGateInPlace(gate, out.state, out.fault);
  return out;
}

GateStatus SelectGateInPlace(const CodeMatrix& matrix, int location,
                             DataState& state, int& gate,
                             std::optional<Fault>& fault) {
  for (int index : matrix.Column(location)) {
    GateStatus status = ApplyGateInPlace(matrix.gates[index], state, fault);
    if (status != GateStatus::kBlocked) {
      gate = index;
      return status;
    }
  }
  gate = -1;
  return GateStatus::kBlocked;
}

Selection SelectGate(const CodeMatrix& matrix, int location,
                     const DataState& state) {
  Selection out;
  out.state = state;
  out.status =
      SelectGateInPlace(matrix, location, out.state, out.gate, out.fault);
  return out;
}

}  // namespace mcx
