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

#ifndef MCX_MACHINE_TRACE_H_
#define MCX_MACHINE_TRACE_H_

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "mcx/machine/eval.h"
#include "mcx/machine/machine.h"
#include "mcx/syntax/ast.h"

namespace mcx {

inline constexpr size_t kDefaultArrayElems = 8;
inline constexpr size_t kAllArrayElems = std::numeric_limits<size_t>::max();

// `v1=n1 v2=n2 arr=[e0,e1,...]` in declaration order. Arrays longer than
// `array_elems` show their first `array_elems` elements followed by `,...`.
std::string FormatState(const std::vector<Variable>& variables,
                        const DataState& state,
                        size_t array_elems = kAllArrayElems);

// Scalars only, in declaration order.
std::string FormatScalars(const std::vector<Variable>& variables,
                          const DataState& state);

// `#<cycle>\t<location>\t<state>`
std::string FormatTraceLine(const std::vector<Variable>& variables,
                            const std::vector<Location>& locations,
                            const TraceEntry& entry,
                            size_t array_elems = kDefaultArrayElems);

}  // namespace mcx

#endif  // MCX_MACHINE_TRACE_H_
