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

#ifndef MCX_MACHINE_EVAL_H_
#define MCX_MACHINE_EVAL_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mcx/syntax/ast.h"

namespace mcx {

enum class FaultKind {
  kDivByZero,
  kOverflow,
  kIndexOutOfBounds,
  kTodoExecuted,
  kUnboundedRange,
};

std::string_view FaultKindName(FaultKind kind);

struct Fault {
  FaultKind kind = FaultKind::kOverflow;
  std::string message;

  std::string ToString() const;
  bool operator==(const Fault&) const = default;
};

class FaultError : public std::runtime_error {
 public:
  explicit FaultError(Fault fault)
      : std::runtime_error(fault.ToString()), fault_(std::move(fault)) {}
  const Fault& fault() const { return fault_; }

 private:
  Fault fault_;
};

// The turtle's data state. Indexed by Variable::slot.
struct DataState {
  std::vector<int64_t> scalars;
  std::vector<std::vector<int64_t>> arrays;

  bool operator==(const DataState&) const = default;
};

using Value = std::variant<int64_t, bool>;

// What a formula may refer to besides the data state.
struct FormulaEnv {
  const std::vector<Predicate>* predicates = nullptr;
  const std::vector<Location>* locations = nullptr;

  static FormulaEnv Of(const CodeMatrix& matrix) {
    return {&matrix.predicates, &matrix.locations};
  }
};

// Longest quantifier range that will be expanded.
inline constexpr int64_t kMaxQuantifierRange = 10'000'000;

// 64-bit checked arithmetic; `/` and `%` truncate toward zero; `&&` and
// `||` short-circuit. Throws FaultError.
Value EvalExpr(const Expr& expr, const DataState& state,
               const FormulaEnv& env = {});
int64_t EvalInt(const Expr& expr, const DataState& state);
bool EvalFormula(const Formula& formula, const DataState& state,
                 const FormulaEnv& env);

// The assertion of `location`; a location without one asserts true.
bool EvalAssertion(const Location& location, const DataState& state,
                   const FormulaEnv& env);

}  // namespace mcx

#endif  // MCX_MACHINE_EVAL_H_
