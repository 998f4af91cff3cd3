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

#include "mcx/machine/eval.h"

#include <fmt/core.h>

namespace mcx {

std::string_view FaultKindName(FaultKind kind) {
  switch (kind) {
    case FaultKind::kDivByZero: return "div-by-zero";
    case FaultKind::kOverflow: return "overflow";
    case FaultKind::kIndexOutOfBounds: return "index-out-of-bounds";
    case FaultKind::kTodoExecuted: return "todo-executed";
    case FaultKind::kUnboundedRange: return "unbounded-range";
  }
  return "fault";
}

std::string Fault::ToString() const {
  return fmt::format("{}: {}", FaultKindName(kind), message);
}

namespace {

struct Slot {
  int64_t value = 0;
  const std::vector<int64_t>* array = nullptr;
};

using Frame = std::vector<Slot>;

[[noreturn]] void Throw(FaultKind kind, std::string message) {
  throw FaultError(Fault{kind, std::move(message)});
}

class Evaluator {
 public:
  Evaluator(const DataState& state, const FormulaEnv& env)
      : state_(state), env_(env) {}

  int64_t Int(const Expr& e, Frame& frame) {
    switch (e.kind) {
      case ExprKind::kIntLit:
        return e.int_value;
      case ExprKind::kVar:
        return e.binding.scope == Binding::Scope::kGlobal
                   ? state_.scalars[e.binding.slot]
                   : frame[e.binding.slot].value;
      case ExprKind::kIndex: {
        const auto& array = Array(e, frame);
        int64_t index = Int(*e.operands[0], frame);
        if (index < 0 || index >= static_cast<int64_t>(array.size())) {
          Throw(FaultKind::kIndexOutOfBounds,
                fmt::format("{}[{}] with length {} in '{}'", e.name, index,
                            array.size(), e.text));
        }
        return array[index];
      }
      case ExprKind::kLen:
        return static_cast<int64_t>(Array(e, frame).size());
      case ExprKind::kUnary: {
        int64_t v = Int(*e.operands[0], frame);
        int64_t r;
        if (__builtin_sub_overflow(int64_t{0}, v, &r)) {
          Throw(FaultKind::kOverflow, fmt::format("'{}'", e.text));
        }
        return r;
      }
      case ExprKind::kBinary:
        return Arith(e, frame);
      default:
        break;
    }
    throw std::logic_error("integer evaluation of non-integer expression");
  }

  bool Bool(const Expr& e, Frame& frame) {
    switch (e.kind) {
      case ExprKind::kBoolLit:
        return e.bool_value;
      case ExprKind::kUnary:
        return !Bool(*e.operands[0], frame);
      case ExprKind::kBinary:
        return Logic(e, frame);
      case ExprKind::kForall:
      case ExprKind::kExists:
        return Quantifier(e, frame);
      case ExprKind::kPredCall:
        return Call(e, frame);
      case ExprKind::kInclude: {
        const Location& loc = (*env_.locations)[e.target];
        if (!loc.assertion) return true;
        Frame fresh;
        return Bool(*loc.assertion, fresh);
      }
      default:
        break;
    }
    throw std::logic_error("boolean evaluation of non-boolean expression");
  }

 private:
  const std::vector<int64_t>& Array(const Expr& e, const Frame& frame) {
    return e.binding.scope == Binding::Scope::kGlobal
               ? state_.arrays[e.binding.slot]
               : *frame[e.binding.slot].array;
  }

  int64_t Arith(const Expr& e, Frame& frame) {
    int64_t a = Int(*e.operands[0], frame);
    int64_t b = Int(*e.operands[1], frame);
    int64_t r = 0;
    bool overflow = false;
    switch (e.op) {
      case Op::kAdd:
        overflow = __builtin_add_overflow(a, b, &r);
        break;
      case Op::kSub:
        overflow = __builtin_sub_overflow(a, b, &r);
        break;
      case Op::kMul:
        overflow = __builtin_mul_overflow(a, b, &r);
        break;
      case Op::kDiv:
      case Op::kMod:
        if (b == 0) {
          Throw(FaultKind::kDivByZero, fmt::format("'{}'", e.text));
        }
        if (a == INT64_MIN && b == -1) {
          overflow = true;
          break;
        }
        r = e.op == Op::kDiv ? a / b : a % b;
        break;
      default:
        throw std::logic_error("not an arithmetic operator");
    }
    if (overflow) Throw(FaultKind::kOverflow, fmt::format("'{}'", e.text));
    return r;
  }

  bool Logic(const Expr& e, Frame& frame) {
    const Expr& lhs = *e.operands[0];
    const Expr& rhs = *e.operands[1];
    switch (e.op) {
      case Op::kAnd:
        return Bool(lhs, frame) && Bool(rhs, frame);
      case Op::kOr:
        return Bool(lhs, frame) || Bool(rhs, frame);
      case Op::kEq:
      case Op::kNe: {
        bool equal = lhs.type == Type::kBool
                         ? Bool(lhs, frame) == Bool(rhs, frame)
                         : Int(lhs, frame) == Int(rhs, frame);
        return e.op == Op::kEq ? equal : !equal;
      }
      case Op::kLt: return Int(lhs, frame) < Int(rhs, frame);
      case Op::kLe: return Int(lhs, frame) <= Int(rhs, frame);
      case Op::kGt: return Int(lhs, frame) > Int(rhs, frame);
      case Op::kGe: return Int(lhs, frame) >= Int(rhs, frame);
      default:
        throw std::logic_error("not a boolean operator");
    }
  }

  bool Quantifier(const Expr& e, Frame& frame) {
    const bool forall = e.kind == ExprKind::kForall;
    int64_t lo = Int(*e.operands[0], frame);
    int64_t hi = Int(*e.operands[1], frame);
    if (lo > hi) return forall;
    if (static_cast<__int128>(hi) - lo >= kMaxQuantifierRange) {
      Throw(FaultKind::kUnboundedRange,
            fmt::format("{}..{} in '{}'", lo, hi, e.text));
    }
    const size_t slot = e.binding.slot;
    if (frame.size() <= slot) frame.resize(slot + 1);
    for (int64_t i = lo;; ++i) {
      frame[slot].value = i;
      if (Bool(*e.operands[2], frame) != forall) return !forall;
      if (i == hi) break;
    }
    return forall;
  }

  bool Call(const Expr& e, Frame& frame) {
    const Predicate& pred = (*env_.predicates)[e.target];
    Frame callee(pred.params.size());
    for (size_t i = 0; i < pred.params.size(); ++i) {
      const Expr& arg = *e.operands[i];
      if (pred.params[i].kind == VarKind::kIntArray) {
        callee[i].array = &Array(arg, frame);
      } else {
        callee[i].value = Int(arg, frame);
      }
    }
    return Bool(*pred.body, callee);
  }

  const DataState& state_;
  const FormulaEnv& env_;
};

}  // namespace

Value EvalExpr(const Expr& expr, const DataState& state,
               const FormulaEnv& env) {
  Evaluator eval(state, env);
  Frame frame;
  if (expr.type == Type::kBool) return eval.Bool(expr, frame);
  return eval.Int(expr, frame);
}

int64_t EvalInt(const Expr& expr, const DataState& state) {
  Frame frame;
  return Evaluator(state, {}).Int(expr, frame);
}

bool EvalFormula(const Formula& formula, const DataState& state,
                 const FormulaEnv& env) {
  Frame frame;
  return Evaluator(state, env).Bool(formula, frame);
}

bool EvalAssertion(const Location& location, const DataState& state,
                   const FormulaEnv& env) {
  return !location.assertion || EvalFormula(*location.assertion, state, env);
}

}  // namespace mcx
