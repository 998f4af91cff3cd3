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

#ifndef MCX_MACHINE_GATE_H_
#define MCX_MACHINE_GATE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "mcx/machine/eval.h"
#include "mcx/syntax/ast.h"

namespace mcx {

// Scoped write access to a DataState. Every assignment is logged and undone
// on Rollback() or destruction unless Commit() was called first.
class StateTransaction {
 public:
  explicit StateTransaction(DataState& state) : state_(state) {}
  ~StateTransaction() {
    if (!committed_) Rollback();
  }
  StateTransaction(const StateTransaction&) = delete;
  StateTransaction& operator=(const StateTransaction&) = delete;

  // Throws FaultError (index out of bounds or an evaluation fault); the
  // state is left as it was before this call.
  void Assign(const AssignStep& assign);
  void Rollback();
  void Commit() { committed_ = true; }

 private:
  struct Undo {
    bool is_array;
    int slot;
    size_t index;
    int64_t old_value;
  };

  DataState& state_;
  std::vector<Undo> log_;
  bool committed_ = false;
};

enum class GateStatus { kPass, kBlocked, kFault };

struct GateOutcome {
  GateStatus status = GateStatus::kBlocked;
  // The new state on kPass; the unchanged input otherwise.
  DataState state;
  std::optional<Fault> fault;
};

// Applies the steps left to right. A false guard anywhere blocks the gate
// and rolls back assignments made before it; a fault does the same.
GateOutcome ApplyGate(const GateDecl& gate, const DataState& state);

// In-place form of ApplyGate: `state` is only modified on kPass.
GateStatus ApplyGateInPlace(const GateDecl& gate, DataState& state,
                            std::optional<Fault>& fault);

struct Selection {
  GateStatus status = GateStatus::kBlocked;
  int gate = -1;  // index into CodeMatrix::gates of the passing/faulting gate
  DataState state;
  std::optional<Fault> fault;
};

// First gate of the column, in declaration order, that lets the state pass.
// A fault in any gate tried stops the search.
Selection SelectGate(const CodeMatrix& matrix, int location,
                     const DataState& state);
GateStatus SelectGateInPlace(const CodeMatrix& matrix, int location,
                             DataState& state, int& gate,
                             std::optional<Fault>& fault);

}  // namespace mcx

#endif  // MCX_MACHINE_GATE_H_
