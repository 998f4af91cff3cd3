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

#ifndef MCX_MACHINE_MACHINE_H_
#define MCX_MACHINE_MACHINE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcx/machine/eval.h"
#include "mcx/machine/gate.h"
#include "mcx/syntax/ast.h"

namespace mcx {

struct TraceEntry {
  uint64_t cycle = 0;
  int location = -1;
  // Gate passed to get here; -1 for the initial entry.
  int gate = -1;
  DataState state;

  bool operator==(const TraceEntry&) const = default;
};

struct RunOptions {
  bool verify = false;
  bool probe_nondeterminism = false;
  uint64_t max_steps = 1'000'000;
  // Keep every trace entry in RunResult::trace.
  bool trace = false;
  // Called with each trace entry as it is produced, whether or not `trace`
  // is set.
  std::function<void(const TraceEntry&)> trace_sink;
};

// Scalar parameter values and array parameter lengths, by name.
struct RunInputs {
  std::map<std::string, int64_t, std::less<>> scalars;
  std::map<std::string, int64_t, std::less<>> lengths;
};

enum class Outcome { kHalted, kBlocked, kFault, kStepLimit };

std::string_view OutcomeName(Outcome outcome);

struct VerificationFinding {
  uint64_t cycle = 0;
  int location = -1;
  std::string assertion;
  // Empty for a plain false assertion; the fault when evaluation failed.
  std::string detail;

  bool operator==(const VerificationFinding&) const = default;
};

struct NondeterminismFinding {
  uint64_t cycle = 0;
  int location = -1;
  int selected_gate = -1;
  int other_gate = -1;

  bool operator==(const NondeterminismFinding&) const = default;
};

struct RunResult {
  Outcome outcome = Outcome::kHalted;
  // Halt on success; where the turtle stopped otherwise.
  int location = -1;
  std::optional<Fault> fault;
  DataState final_state;
  uint64_t cycles = 0;
  std::vector<TraceEntry> trace;
  std::vector<VerificationFinding> violations;
  std::vector<NondeterminismFinding> overlaps;

  bool operator==(const RunResult&) const = default;
};

// Initial data state: scalar params from `inputs`, arrays of the given
// lengths filled with 0, locals 0. Throws std::invalid_argument for
// unbound, unknown or negative-length inputs.
DataState BindInputs(const std::vector<Variable>& variables,
                     const RunInputs& inputs);

RunResult Run(const CodeMatrix& matrix, const DataState& initial,
              const RunOptions& options);
RunResult Run(const CodeMatrix& matrix, const RunInputs& inputs,
              const RunOptions& options);

// The cycle loop shared by the matrix interpreter and the flat state
// machine. `step` performs one cycle in place and reports the passed
// gate and the new location; `overlaps` lists the later gates of the
// column that would also pass from `before`.
struct CycleStep {
  GateStatus status = GateStatus::kBlocked;
  int gate = -1;
  int target = -1;
  std::optional<Fault> fault;
};

struct MachineDriver {
  FormulaEnv env;
  int start = -1;
  int halt = -1;
  std::function<CycleStep(int location, DataState& state)> step;
  std::function<std::vector<int>(int location, int selected,
                                 const DataState& before)>
      overlaps;
};

RunResult DriveRun(const MachineDriver& driver, const DataState& initial,
                   const RunOptions& options);

int64_t ScalarValue(const std::vector<Variable>& variables,
                    const DataState& state, std::string_view name);
const std::vector<int64_t>& ArrayValue(const std::vector<Variable>& variables,
                                       const DataState& state,
                                       std::string_view name);

}  // namespace mcx

#endif  // MCX_MACHINE_MACHINE_H_
