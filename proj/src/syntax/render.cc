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

#include "mcx/syntax/render.h"

#include <algorithm>

#include <fmt/core.h>

namespace mcx {

std::string GateCellText(const GateDecl& gate) {
  std::string text;
  for (const auto& step : gate.steps) {
    if (!text.empty()) text += "; ";
    if (const auto* guard = std::get_if<GuardStep>(&step)) {
      text += guard->condition->text;
    } else if (const auto* assign = std::get_if<AssignStep>(&step)) {
      text += FormatAssign(*assign);
    } else {
      text += "/*" + std::get<TodoStep>(step).note + "*/";
    }
  }
  return text;
}

MatrixGrid LayoutGrid(const CodeMatrix& matrix) {
  const int count = static_cast<int>(matrix.locations.size());
  auto has_gate = [&](auto pred) {
    return std::any_of(matrix.gates.begin(), matrix.gates.end(), pred);
  };

  MatrixGrid grid;
  std::vector<int> columns = {matrix.start};
  for (int i = 0; i < count; ++i) {
    if (i == matrix.start) continue;
    if (i == matrix.halt && matrix.Column(i).empty()) continue;
    columns.push_back(i);
  }
  grid.columns.assign(columns.rbegin(), columns.rend());

  grid.rows.push_back(matrix.halt);
  bool start_row = has_gate(
      [&](const GateDecl& g) { return g.target == matrix.start; });
  for (int i = 0; i < count; ++i) {
    if (i == matrix.halt) continue;
    if (i == matrix.start && !start_row) continue;
    grid.rows.push_back(i);
  }
  if (has_gate([](const GateDecl& g) { return g.HasUnknownTarget(); })) {
    grid.rows.push_back(kUnknownTarget);
  }

  grid.cells.assign(grid.rows.size(),
                    std::vector<std::string>(grid.columns.size()));
  for (const auto& gate : matrix.gates) {
    auto r = std::find(grid.rows.begin(), grid.rows.end(), gate.target) -
             grid.rows.begin();
    auto c = std::find(grid.columns.begin(), grid.columns.end(), gate.source) -
             grid.columns.begin();
    std::string& cell = grid.cells[r][c];
    if (!cell.empty()) cell += " / ";
    cell += GateCellText(gate);
  }
  return grid;
}

std::string RenderMatrix(const CodeMatrix& matrix) {
  MatrixGrid grid = LayoutGrid(matrix);
  auto label = [&](int loc) {
    if (loc == kUnknownTarget) return std::string("?");
    return fmt::format("{}: {}", matrix.locations[loc].id,
                       matrix.locations[loc].AssertionText());
  };

  std::vector<std::string> headers;
  for (int col : grid.columns) {
    bool is_row =
        std::find(grid.rows.begin(), grid.rows.end(), col) != grid.rows.end();
    headers.push_back(is_row ? matrix.locations[col].id : label(col));
  }
  std::vector<size_t> widths;
  for (size_t c = 0; c < grid.columns.size(); ++c) {
    size_t w = headers[c].size();
    for (const auto& row : grid.cells) w = std::max(w, row[c].size());
    widths.push_back(w);
  }

  auto line = [&](const std::vector<std::string>& cells,
                  const std::string& tail) {
    std::string out;
    for (size_t c = 0; c < cells.size(); ++c) {
      out += fmt::format(" {:<{}} |", cells[c], widths[c]);
    }
    out += "|";
    if (!tail.empty()) out += " " + tail;
    return out + "\n";
  };
  auto rule = [&](char fill) {
    std::string out;
    for (size_t c = 0; c < widths.size(); ++c) {
      out += std::string(widths[c] + 2, fill);
      out += '+';
    }
    return out + "+\n";
  };

  std::string out = line(headers, "");
  out += rule('=');
  for (size_t r = 0; r < grid.rows.size(); ++r) {
    out += line(grid.cells[r], label(grid.rows[r]));
    out += rule('-');
  }
  return out;
}

}  // namespace mcx
