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

#include "mcx/codegen/emit.h"

#include <stdexcept>

#include <fmt/core.h>

namespace mcx {
namespace {

Op ComplementOp(Op op) {
  switch (op) {
    case Op::kEq: return Op::kNe;
    case Op::kNe: return Op::kEq;
    case Op::kLt: return Op::kGe;
    case Op::kGe: return Op::kLt;
    case Op::kLe: return Op::kGt;
    case Op::kGt: return Op::kLe;
    default: return Op::kNone;
  }
}

bool IsNegationOf(const Expr& negated, const Expr& e) {
  return negated.kind == ExprKind::kUnary && negated.op == Op::kNot &&
         SameExpr(*negated.operands[0], e);
}

std::string GuardText(const FlatBranch& branch) {
  if (branch.guards.size() == 1) return branch.guards[0]->text;
  std::string out;
  for (const auto& g : branch.guards) {
    if (!out.empty()) out += " && ";
    bool wrap = g->kind == ExprKind::kBinary && g->op == Op::kOr &&
                g->text.front() != '(';
    out += wrap ? "(" + g->text + ")" : g->text;
  }
  return out;
}

std::string Body(const FlatProgram& program, const FlatBranch& branch) {
  std::string out;
  for (const auto& assign : branch.assignments) {
    out += FormatAssign(assign) + "; ";
  }
  return out + fmt::format("state = {};", program.states[branch.next].id);
}

std::string Trap(const FlatState& state) {
  return fmt::format(
      "throw new IllegalStateException(\"blocked in state {}\");", state.id);
}

std::string CaseBody(const FlatProgram& program, const FlatState& state) {
  const auto& branches = state.branches;
  if (branches.empty()) return Trap(state);
  if (branches[0].guards.empty()) return Body(program, branches[0]) + " break;";
  if (branches.size() == 2 && branches[0].guards.size() == 1 &&
      branches[1].guards.size() == 1 &&
      IsComplement(*branches[0].guards[0], *branches[1].guards[0])) {
    return fmt::format("if ({}) {{ {} }} else {{ {} }} break;",
                       GuardText(branches[0]), Body(program, branches[0]),
                       Body(program, branches[1]));
  }
  std::string out;
  bool closed = false;
  for (size_t i = 0; i < branches.size(); ++i) {
    const FlatBranch& b = branches[i];
    if (b.guards.empty()) {
      out += fmt::format(" else {{ {} }}", Body(program, b));
      closed = true;
      break;
    }
    out += fmt::format("{}if ({}) {{ {} }}", i == 0 ? "" : " else ",
                       GuardText(b), Body(program, b));
  }
  if (!closed) out += fmt::format(" else {{ {} }}", Trap(state));
  return out + " break;";
}

}  // namespace

bool IsComplement(const Expr& a, const Expr& b) {
  if (IsNegationOf(a, b) || IsNegationOf(b, a)) return true;
  if (a.kind != ExprKind::kBinary || b.kind != ExprKind::kBinary) return false;
  Op complement = ComplementOp(a.op);
  return complement != Op::kNone && complement == b.op &&
         SameExpr(*a.operands[0], *b.operands[0]) &&
         SameExpr(*a.operands[1], *b.operands[1]);
}

std::string EmitSwitch(const FlatProgram& program,
                       const EmitOptions& options) {
  if (options.indent < 1) throw std::invalid_argument("indent must be >= 1");
  auto pad = [&](int level) { return std::string(level * options.indent, ' '); };
  const std::string& name =
      options.function_name.empty() ? program.name : options.function_name;

  std::string params;
  std::string locals;
  for (const auto& v : program.variables) {
    if (v.is_param) {
      if (!params.empty()) params += ", ";
      params += fmt::format("{} {}", v.kind == VarKind::kInt ? "int" : "int[]",
                            v.name);
    } else {
      if (!locals.empty()) locals += ", ";
      locals += v.name + "=0";
    }
  }
  std::string codes;
  for (const auto& s : program.states) {
    if (!codes.empty()) codes += ", ";
    codes += fmt::format("{}={}", s.id, s.code);
  }

  std::string out = fmt::format("public static void {}({}) {{\n", name, params);
  out += fmt::format("{}final int {};\n", pad(1), codes);
  out += fmt::format("{}int state={};\n", pad(1),
                     program.states[program.start_code].id);
  if (!locals.empty()) out += fmt::format("{}int {};\n", pad(1), locals);
  out += fmt::format("{}while (true) {{\n", pad(1));
  out += fmt::format("{}switch (state) {{\n", pad(2));
  for (const auto& s : program.states) {
    if (s.code == program.halt_code) continue;
    out += fmt::format("{}case {}: {}\n", pad(3), s.id, CaseBody(program, s));
  }
  out += fmt::format("{}case {}: return;\n", pad(3),
                     program.states[program.halt_code].id);
  out += fmt::format("{}}} }} }}\n", pad(1));
  return out;
}

}  // namespace mcx
