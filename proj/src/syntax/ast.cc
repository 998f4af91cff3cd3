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

#include "mcx/syntax/ast.h"

#include <algorithm>

#include <fmt/core.h>

namespace mcx {

std::string_view OpSpelling(Op op) {
  switch (op) {
    case Op::kNone: return "";
    case Op::kAdd: return "+";
    case Op::kSub: return "-";
    case Op::kMul: return "*";
    case Op::kDiv: return "/";
    case Op::kMod: return "%";
    case Op::kNeg: return "-";
    case Op::kNot: return "!";
    case Op::kEq: return "==";
    case Op::kNe: return "!=";
    case Op::kLt: return "<";
    case Op::kLe: return "<=";
    case Op::kGt: return ">";
    case Op::kGe: return ">=";
    case Op::kAnd: return "&&";
    case Op::kOr: return "||";
  }
  return "";
}

bool StructurallyEqual(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return StructurallyEqual(*a, *b);
}

namespace {

bool Compare(const Expr& a, const Expr& b, bool spelling) {
  if (a.kind != b.kind || a.op != b.op || a.int_value != b.int_value ||
      a.bool_value != b.bool_value || a.name != b.name ||
      a.binding != b.binding || a.target != b.target || a.type != b.type ||
      (spelling && a.text != b.text) ||
      a.operands.size() != b.operands.size()) {
    return false;
  }
  for (size_t i = 0; i < a.operands.size(); ++i) {
    if (!Compare(*a.operands[i], *b.operands[i], spelling)) return false;
  }
  return true;
}

}  // namespace

bool StructurallyEqual(const Expr& a, const Expr& b) {
  return Compare(a, b, true);
}

bool SameExpr(const Expr& a, const Expr& b) { return Compare(a, b, false); }

std::string FormatAssign(const AssignStep& assign) {
  if (assign.index) {
    return fmt::format("{}[{}] = {}", assign.target, assign.index->text,
                       assign.value->text);
  }
  return fmt::format("{} = {}", assign.target, assign.value->text);
}

std::string FormatStep(const GateStep& step) {
  if (const auto* guard = std::get_if<GuardStep>(&step)) {
    return "when " + guard->condition->text;
  }
  if (const auto* assign = std::get_if<AssignStep>(&step)) {
    return FormatAssign(*assign);
  }
  const auto& todo = std::get<TodoStep>(step);
  std::string quoted = "\"";
  for (char c : todo.note) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  return "todo " + quoted + "\"";
}

bool GateDecl::IsTodo() const {
  return std::any_of(steps.begin(), steps.end(), [](const GateStep& s) {
    return std::holds_alternative<TodoStep>(s);
  });
}

void CodeMatrix::IndexGates() {
  columns_.assign(locations.size(), {});
  for (int i = 0; i < static_cast<int>(gates.size()); ++i) {
    columns_[gates[i].source].push_back(i);
  }
}

void CodeMatrix::CountSlots() {
  scalar_count_ = 0;
  array_count_ = 0;
  for (auto& v : variables) {
    v.slot = v.kind == VarKind::kInt ? scalar_count_++ : array_count_++;
  }
}

std::optional<int> CodeMatrix::FindLocation(std::string_view id) const {
  for (int i = 0; i < static_cast<int>(locations.size()); ++i) {
    if (locations[i].id == id) return i;
  }
  return std::nullopt;
}

const Variable* CodeMatrix::FindVariable(std::string_view name) const {
  for (const auto& v : variables) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

int CodeMatrix::ColumnIndex(int gate_index) const {
  const auto& column = columns_[gates[gate_index].source];
  auto it = std::find(column.begin(), column.end(), gate_index);
  return static_cast<int>(it - column.begin());
}

namespace {

bool StepsEqual(const GateStep& a, const GateStep& b) {
  if (a.index() != b.index()) return false;
  if (const auto* ga = std::get_if<GuardStep>(&a)) {
    return StructurallyEqual(ga->condition, std::get<GuardStep>(b).condition);
  }
  if (const auto* aa = std::get_if<AssignStep>(&a)) {
    const auto& ab = std::get<AssignStep>(b);
    return aa->target == ab.target && aa->binding == ab.binding &&
           StructurallyEqual(aa->index, ab.index) &&
           StructurallyEqual(aa->value, ab.value);
  }
  return std::get<TodoStep>(a).note == std::get<TodoStep>(b).note;
}

}  // namespace

bool StructurallyEqual(const CodeMatrix& a, const CodeMatrix& b) {
  if (a.name != b.name || a.start != b.start || a.halt != b.halt ||
      a.variables.size() != b.variables.size() ||
      a.predicates.size() != b.predicates.size() ||
      a.locations.size() != b.locations.size() ||
      a.gates.size() != b.gates.size()) {
    return false;
  }
  for (size_t i = 0; i < a.variables.size(); ++i) {
    const auto& va = a.variables[i];
    const auto& vb = b.variables[i];
    if (va.name != vb.name || va.kind != vb.kind ||
        va.is_param != vb.is_param || va.slot != vb.slot) {
      return false;
    }
  }
  for (size_t i = 0; i < a.predicates.size(); ++i) {
    const auto& pa = a.predicates[i];
    const auto& pb = b.predicates[i];
    if (pa.name != pb.name || pa.params.size() != pb.params.size() ||
        !StructurallyEqual(pa.body, pb.body)) {
      return false;
    }
    for (size_t j = 0; j < pa.params.size(); ++j) {
      if (pa.params[j].name != pb.params[j].name ||
          pa.params[j].kind != pb.params[j].kind) {
        return false;
      }
    }
  }
  for (size_t i = 0; i < a.locations.size(); ++i) {
    if (a.locations[i].id != b.locations[i].id ||
        !StructurallyEqual(a.locations[i].assertion,
                           b.locations[i].assertion)) {
      return false;
    }
  }
  for (size_t i = 0; i < a.gates.size(); ++i) {
    const auto& ga = a.gates[i];
    const auto& gb = b.gates[i];
    if (ga.source != gb.source || ga.target != gb.target ||
        ga.steps.size() != gb.steps.size()) {
      return false;
    }
    for (size_t j = 0; j < ga.steps.size(); ++j) {
      if (!StepsEqual(ga.steps[j], gb.steps[j])) return false;
    }
  }
  return true;
}

}  // namespace mcx
