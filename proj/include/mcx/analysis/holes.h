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

#ifndef MCX_ANALYSIS_HOLES_H_
#define MCX_ANALYSIS_HOLES_H_

#include <vector>

#include "mcx/syntax/ast.h"
#include "mcx/syntax/validate.h"

namespace mcx {

// Static holes: TODO-GATE per todo gate, EMPTY-COLUMN per non-halt location
// without outgoing gates, UNREACHABLE-LOCATION per non-start location that
// no gate targets. Columns where no gate passes at run time are reported
// by Run() as a blocked outcome instead.
std::vector<Finding> FindHoles(const CodeMatrix& matrix);

// Validate() followed by the FindHoles() findings it does not already
// contain. This is what `mcx check` prints.
std::vector<Finding> CheckFindings(const CodeMatrix& matrix);

}  // namespace mcx

#endif  // MCX_ANALYSIS_HOLES_H_
