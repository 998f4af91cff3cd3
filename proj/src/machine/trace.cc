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

#include "mcx/machine/trace.h"

#include <fmt/core.h>

namespace mcx {

std::string FormatState(const std::vector<Variable>& variables,
                        const DataState& state, size_t array_elems) {
  std::string out;
  for (const auto& v : variables) {
    if (!out.empty()) out += ' ';
    if (v.kind == VarKind::kInt) {
      out += fmt::format("{}={}", v.name, state.scalars[v.slot]);
      continue;
    }
    const auto& array = state.arrays[v.slot];
    out += v.name + "=[";
    size_t shown = std::min(array.size(), array_elems);
    for (size_t i = 0; i < shown; ++i) {
      if (i) out += ',';
      out += std::to_string(array[i]);
    }
    if (shown < array.size()) out += shown ? ",..." : "...";
    out += ']';
  }
  return out;
}

std::string FormatScalars(const std::vector<Variable>& variables,
                          const DataState& state) {
  std::string out;
  for (const auto& v : variables) {
    if (v.kind != VarKind::kInt) continue;
    if (!out.empty()) out += ' ';
    out += fmt::format("{}={}", v.name, state.scalars[v.slot]);
  }
  return out;
}

std::string FormatTraceLine(const std::vector<Variable>& variables,
                            const std::vector<Location>& locations,
                            const TraceEntry& entry, size_t array_elems) {
  return fmt::format("#{}\t{}\t{}", entry.cycle, locations[entry.location].id,
                     FormatState(variables, entry.state, array_elems));
}

}  // namespace mcx
