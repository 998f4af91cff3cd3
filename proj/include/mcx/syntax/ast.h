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

#ifndef MCX_SYNTAX_AST_H_
#define MCX_SYNTAX_AST_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mcx {

struct SourceLoc {
  int line = 0;
  int column = 0;

  bool operator==(const SourceLoc&) const = default;
};

enum class VarKind { kInt, kIntArray };

enum class Type { kInt, kBool, kArray };

enum class ExprKind {
  kIntLit,
  kBoolLit,
  kVar,       // scalar (or, as a predicate argument, array) reference
  kIndex,     // name[operands[0]]
  kLen,       // len(name)
  kUnary,     // op applied to operands[0]
  kBinary,    // operands[0] op operands[1]
  kForall,    // name in operands[0]..operands[1]: operands[2]
  kExists,
  kPredCall,  // target = predicate index, operands = arguments
  kInclude,   // @L, target = location index
};

enum class Op {
  kNone,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMod,
  kNeg,
  kNot,
  kEq,
  kNe,
  kLt,
  kLe,
  kGt,
  kGe,
  kAnd,
  kOr,
};

std::string_view OpSpelling(Op op);

// Where a name lives once resolved. Globals index DataState::scalars or
// DataState::arrays depending on the referenced type; frame slots hold
// quantifier-bound variables and predicate parameters.
struct Binding {
  enum class Scope { kUnresolved, kGlobal, kFrame };
  Scope scope = Scope::kUnresolved;
  int slot = -1;

  bool operator==(const Binding&) const = default;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Expressions and formulas share one node type. Formulas are the
// boolean-valued trees that may additionally contain quantifiers,
// predicate calls and assertion inclusions; gate steps never do.
struct Expr {
  ExprKind kind = ExprKind::kIntLit;
  Op op = Op::kNone;
  int64_t int_value = 0;
  bool bool_value = false;
  std::string name;
  std::vector<ExprPtr> operands;
  Binding binding;
  int target = -1;
  Type type = Type::kInt;
  SourceLoc loc;
  // Source spelling with whitespace runs collapsed to one space.
  std::string text;
};

using Formula = Expr;

// Compares shape, names, resolution and spelling; ignores source locations.
bool StructurallyEqual(const Expr& a, const Expr& b);
bool StructurallyEqual(const ExprPtr& a, const ExprPtr& b);

// Like StructurallyEqual but also ignores spelling, so `(k < N)` and
// `k < N` compare equal.
bool SameExpr(const Expr& a, const Expr& b);

struct Variable {
  std::string name;
  VarKind kind = VarKind::kInt;
  bool is_param = false;
  // Index into DataState::scalars or DataState::arrays.
  int slot = -1;
  SourceLoc loc;
};

struct PredParam {
  std::string name;
  VarKind kind = VarKind::kInt;
};

struct Predicate {
  std::string name;
  std::vector<PredParam> params;
  ExprPtr body;
  SourceLoc loc;
};

struct Location {
  std::string id;
  // Null means the location asserts `true`.
  ExprPtr assertion;
  SourceLoc loc;

  std::string AssertionText() const {
    return assertion ? assertion->text : "true";
  }
};

struct GuardStep {
  ExprPtr condition;
};

struct AssignStep {
  std::string target;
  Binding binding;
  ExprPtr index;  // null for scalar targets
  ExprPtr value;
  SourceLoc loc;
};

struct TodoStep {
  std::string note;
};

using GateStep = std::variant<GuardStep, AssignStep, TodoStep>;

std::string FormatStep(const GateStep& step);
std::string FormatAssign(const AssignStep& assign);

inline constexpr int kUnknownTarget = -1;

struct GateDecl {
  int source = -1;
  // kUnknownTarget for `gate X -> ?: todo "..."`.
  int target = kUnknownTarget;
  std::vector<GateStep> steps;
  SourceLoc loc;

  bool IsTodo() const;
  bool HasUnknownTarget() const { return target == kUnknownTarget; }
};

class CodeMatrix {
 public:
  std::string name;
  std::vector<Variable> variables;  // params first, then locals
  std::vector<Predicate> predicates;
  std::vector<Location> locations;
  int start = -1;
  int halt = -1;
  std::vector<GateDecl> gates;

  // Gate indices per source location, in declaration order. Filled by
  // IndexGates(); the parser always calls it.
  const std::vector<int>& Column(int location) const {
    return columns_[location];
  }
  void IndexGates();

  std::optional<int> FindLocation(std::string_view id) const;
  const Variable* FindVariable(std::string_view name) const;

  int ScalarCount() const { return scalar_count_; }
  int ArrayCount() const { return array_count_; }
  void CountSlots();

  // Position of gate `gate_index` within its column.
  int ColumnIndex(int gate_index) const;

 private:
  std::vector<std::vector<int>> columns_;
  int scalar_count_ = 0;
  int array_count_ = 0;
};

// Structural equality ignoring source locations; used for round-trip checks.
bool StructurallyEqual(const CodeMatrix& a, const CodeMatrix& b);

}  // namespace mcx

#endif  // MCX_SYNTAX_AST_H_
