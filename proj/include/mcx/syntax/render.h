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

#ifndef MCX_SYNTAX_RENDER_H_
#define MCX_SYNTAX_RENDER_H_

#include <string>
#include <vector>

#include "mcx/syntax/ast.h"

namespace mcx {

// The matrix as a grid: columns are gate sources, rows gate targets.
// Columns run right to left from the start location in declaration order;
// rows list the halt location first, then declaration order. A row for the
// start location (or a column for halt) only appears when some gate needs
// it; a trailing `kUnknownTarget` row holds `gate X -> ?` placeholders.
struct MatrixGrid {
  std::vector<int> columns;
  std::vector<int> rows;
  // cells[row][column]; gates sharing a cell are joined by " / ".
  std::vector<std::vector<std::string>> cells;
};

MatrixGrid LayoutGrid(const CodeMatrix& matrix);

// Cell spelling of one gate: bare guards, plain assignments, steps joined
// by "; ".
std::string GateCellText(const GateDecl& gate);

std::string RenderMatrix(const CodeMatrix& matrix);

}  // namespace mcx

#endif  // MCX_SYNTAX_RENDER_H_
