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

#ifndef MCX_CODEGEN_FLAT_H_
#define MCX_CODEGEN_FLAT_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "mcx/machine/machine.h"
#include "mcx/syntax/ast.h"
#include "mcx/syntax/validate.h"

namespace mcx {

struct FlatBranch {
  std::vector<ExprPtr> guards;  // conjunction; empty means always taken
  std::vector<AssignStep> assignments;
  int next = -1;
  int gate = -1;  // originating gate in the matrix
};

struct FlatState {
  std::string id;
  int code = -1;
  std::vector<FlatBranch> branches;
};

// A matrix lowered to a switch-style state machine. State codes follow
// location declaration order starting at 0; the halt state has no branches.
struct FlatProgram {
  std::string name;
  std::vector<Variable> variables;
  std::vector<Predicate> predicates;  // for assertion checking only
  std::vector<Location> locations;    // indexed by state code
  std::vector<FlatState> states;
  int start_code = -1;
  int halt_code = -1;
};

class NotLowerableError : public std::runtime_error {
 public:
  explicit NotLowerableError(Finding finding)
      : std::runtime_error("not lowerable: " + finding.ToString()),
        finding_(std::move(finding)) {}
  const Finding& finding() const { return finding_; }

 private:
  Finding finding_;
};

// Throws NotLowerableError when Validate() reports a TODO-GATE or a
// GUARDS-FIRST-VIOLATION.
FlatProgram Lower(const CodeMatrix& matrix);

// Same contract as Run(): the first branch whose guards all hold is taken.
RunResult RunFlat(const FlatProgram& program, const DataState& initial,
                  const RunOptions& options);
RunResult RunFlat(const FlatProgram& program, const RunInputs& inputs,
                  const RunOptions& options);

}  // namespace mcx

#endif  // MCX_CODEGEN_FLAT_H_
