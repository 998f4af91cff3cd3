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

#ifndef MCX_SYNTAX_PRINTER_H_
#define MCX_SYNTAX_PRINTER_H_

#include <string>

#include "mcx/syntax/ast.h"

namespace mcx {

// Canonical `.mcx` text. ParseMatrix(PrintMatrix(m)) is structurally equal
// to m; comments and layout of the original file are not preserved.
std::string PrintMatrix(const CodeMatrix& matrix);

}  // namespace mcx

#endif  // MCX_SYNTAX_PRINTER_H_
