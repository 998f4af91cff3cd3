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

#ifndef MCX_CODEGEN_EMIT_H_
#define MCX_CODEGEN_EMIT_H_

#include <string>

#include "mcx/codegen/flat.h"
#include "mcx/syntax/ast.h"

namespace mcx {

struct EmitOptions {
  // Defaults to the matrix name.
  std::string function_name;
  int indent = 2;
};

// True when `b` is `!a` (or `a` is `!b`), or both are the same comparison
// with complementary operators, e.g. `k >= N` and `k < N`.
bool IsComplement(const Expr& a, const Expr& b);

// The literal while/switch translation, one `case` line per state:
//
//   case B: if (p[n]*p[n] > j) { p[k] = j; k = k + 1; state = A; } else { state = C; } break;
//
// Two guarded branches with complementary guards become if/else; any other
// guarded chain ends in a trap that throws when no branch applies.
std::string EmitSwitch(const FlatProgram& program,
                       const EmitOptions& options = {});

}  // namespace mcx

#endif  // MCX_CODEGEN_EMIT_H_
