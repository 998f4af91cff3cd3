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

#include "mcx/analysis/triples.h"

#include <fmt/core.h>

namespace mcx {

std::vector<HoareTriple> ExtractTriples(const CodeMatrix& matrix,
                                        std::vector<Finding>* skipped) {
  std::vector<HoareTriple> triples;
  for (int loc = 0; loc < static_cast<int>(matrix.locations.size()); ++loc) {
    const auto& column = matrix.Column(loc);
    for (size_t pos = 0; pos < column.size(); ++pos) {
      const GateDecl& gate = matrix.gates[column[pos]];
      if (gate.IsTodo()) {
        if (skipped) {
          skipped->push_back({Severity::kWarning, "TODO-GATE",
                              GateSite(matrix, gate),
                              "todo gate has no Hoare triple"});
        }
        continue;
      }
      HoareTriple triple;
      triple.gate = column[pos];
      triple.pre_location = loc;
      triple.post_location = gate.target;
      triple.column_index = static_cast<int>(pos);
      for (const auto& step : gate.steps) {
        if (const auto* guard = std::get_if<GuardStep>(&step)) {
          triple.guards.push_back(guard->condition);
        } else {
          triple.statements.push_back(std::get<AssignStep>(step));
        }
      }
      triples.push_back(std::move(triple));
    }
  }
  return triples;
}

std::string RenderTriple(const CodeMatrix& matrix, const HoareTriple& triple) {
  std::string out = "{" + matrix.locations[triple.pre_location].id;
  for (const auto& guard : triple.guards) {
    bool wrap = guard->kind == ExprKind::kBinary && guard->op == Op::kOr &&
                guard->text.front() != '(';
    out += " && " + (wrap ? "(" + guard->text + ")" : guard->text);
  }
  out += "}";
  for (size_t i = 0; i < triple.statements.size(); ++i) {
    out += (i == 0 ? " " : "; ") + FormatAssign(triple.statements[i]);
  }
  return out + fmt::format(" {{{}}}", matrix.locations[triple.post_location].id);
}

}  // namespace mcx
