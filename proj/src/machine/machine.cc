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

#include "mcx/machine/machine.h"

#include <stdexcept>

#include <fmt/core.h>

namespace mcx {

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kHalted: return "halted";
    case Outcome::kBlocked: return "blocked";
    case Outcome::kFault: return "fault";
    case Outcome::kStepLimit: return "step-limit";
  }
  return "unknown";
}

DataState BindInputs(const std::vector<Variable>& variables,
                     const RunInputs& inputs) {
  DataState state;
  for (const auto& [name, value] : inputs.scalars) {
    const Variable* v = nullptr;
    for (const auto& candidate : variables) {
      if (candidate.name == name) v = &candidate;
    }
    if (!v || !v->is_param || v->kind != VarKind::kInt) {
      throw std::invalid_argument(
          fmt::format("{} is not a scalar parameter", name));
    }
  }
  for (const auto& [name, length] : inputs.lengths) {
    const Variable* v = nullptr;
    for (const auto& candidate : variables) {
      if (candidate.name == name) v = &candidate;
    }
    if (!v || v->kind != VarKind::kIntArray) {
      throw std::invalid_argument(
          fmt::format("{} is not an array parameter", name));
    }
    if (length < 0) {
      throw std::invalid_argument(
          fmt::format("negative length {} for array {}", length, name));
    }
  }
  for (const auto& v : variables) {
    if (v.kind == VarKind::kInt) {
      if (state.scalars.size() <= static_cast<size_t>(v.slot)) {
        state.scalars.resize(v.slot + 1);
      }
      if (!v.is_param) continue;
      auto it = inputs.scalars.find(v.name);
      if (it == inputs.scalars.end()) {
        throw std::invalid_argument(
            fmt::format("no value for parameter {}", v.name));
      }
      state.scalars[v.slot] = it->second;
    } else {
      if (state.arrays.size() <= static_cast<size_t>(v.slot)) {
        state.arrays.resize(v.slot + 1);
      }
      auto it = inputs.lengths.find(v.name);
      if (it == inputs.lengths.end()) {
        throw std::invalid_argument(
            fmt::format("no length for array parameter {}", v.name));
      }
      state.arrays[v.slot].assign(static_cast<size_t>(it->second), 0);
    }
  }
  return state;
}

RunResult DriveRun(const MachineDriver& driver, const DataState& initial,
                   const RunOptions& options) {
  RunResult result;
  DataState& state = result.final_state;
  state = initial;
  int location = driver.start;
  DataState before;

  auto arrive = [&](int gate) {
    if (options.trace || options.trace_sink) {
      TraceEntry entry{result.cycles, location, gate, state};
      if (options.trace_sink) options.trace_sink(entry);
      if (options.trace) result.trace.push_back(std::move(entry));
    }
    if (!options.verify) return;
    const Location& loc = (*driver.env.locations)[location];
    try {
      if (!EvalAssertion(loc, state, driver.env)) {
        result.violations.push_back(
            {result.cycles, location, loc.AssertionText(), ""});
      }
    } catch (const FaultError& e) {
      result.violations.push_back({result.cycles, location,
                                   loc.AssertionText(),
                                   "evaluation fault: " + e.fault().ToString()});
    }
  };

  arrive(-1);
  while (true) {
    if (location == driver.halt) {
      result.outcome = Outcome::kHalted;
      break;
    }
    if (result.cycles >= options.max_steps) {
      result.outcome = Outcome::kStepLimit;
      break;
    }
    if (options.probe_nondeterminism) before = state;
    CycleStep step = driver.step(location, state);
    if (step.status == GateStatus::kBlocked) {
      result.outcome = Outcome::kBlocked;
      break;
    }
    if (step.status == GateStatus::kFault) {
      result.outcome = Outcome::kFault;
      result.fault = step.fault;
      break;
    }
    if (options.probe_nondeterminism) {
      for (int other : driver.overlaps(location, step.gate, before)) {
        result.overlaps.push_back({result.cycles, location, step.gate, other});
      }
    }
    ++result.cycles;
    location = step.target;
    arrive(step.gate);
  }
  result.location = location;
  return result;
}

RunResult Run(const CodeMatrix& matrix, const DataState& initial,
              const RunOptions& options) {
  MachineDriver driver;
  driver.env = FormulaEnv::Of(matrix);
  driver.start = matrix.start;
  driver.halt = matrix.halt;
  driver.step = [&matrix](int location, DataState& state) {
    CycleStep step;
    step.status =
        SelectGateInPlace(matrix, location, state, step.gate, step.fault);
    if (step.status == GateStatus::kPass) {
      step.target = matrix.gates[step.gate].target;
    }
    return step;
  };
  driver.overlaps = [&matrix](int location, int selected,
                              const DataState& before) {
    std::vector<int> others;
    bool later = false;
    DataState scratch = before;
    for (int index : matrix.Column(location)) {
      if (index == selected) {
        later = true;
        continue;
      }
      if (!later) continue;
      std::optional<Fault> fault;
      if (ApplyGateInPlace(matrix.gates[index], scratch, fault) ==
          GateStatus::kPass) {
        others.push_back(index);
        scratch = before;
      }
    }
    return others;
  };
  return DriveRun(driver, initial, options);
}

RunResult Run(const CodeMatrix& matrix, const RunInputs& inputs,
              const RunOptions& options) {
  return Run(matrix, BindInputs(matrix.variables, inputs), options);
}

namespace {

const Variable& Find(const std::vector<Variable>& variables,
                     std::string_view name) {
  for (const auto& v : variables) {
    if (v.name == name) return v;
  }
  throw std::invalid_argument(fmt::format("unknown variable {}", name));
}

}  // namespace

int64_t ScalarValue(const std::vector<Variable>& variables,
                    const DataState& state, std::string_view name) {
  const Variable& v = Find(variables, name);
  if (v.kind != VarKind::kInt) {
    throw std::invalid_argument(fmt::format("{} is an array", name));
  }
  return state.scalars[v.slot];
}

const std::vector<int64_t>& ArrayValue(const std::vector<Variable>& variables,
                                       const DataState& state,
                                       std::string_view name) {
  const Variable& v = Find(variables, name);
  if (v.kind != VarKind::kIntArray) {
    throw std::invalid_argument(fmt::format("{} is not an array", name));
  }
  return state.arrays[v.slot];
}

}  // namespace mcx
