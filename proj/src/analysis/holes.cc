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

#include "mcx/analysis/holes.h"

#include <algorithm>

#include <fmt/core.h>

namespace mcx {

std::vector<Finding> FindHoles(const CodeMatrix& matrix) {
  std::vector<Finding> findings;
  for (const auto& gate : matrix.gates) {
    if (gate.IsTodo()) {
      findings.push_back(
          {Severity::kWarning, "TODO-GATE", GateSite(matrix, gate),
           fmt::format("gate body unknown: {}",
                       std::get<TodoStep>(gate.steps.front()).note)});
    }
  }
  const int count = static_cast<int>(matrix.locations.size());
  std::vector<bool> entered(count, false);
  for (const auto& gate : matrix.gates) {
    if (!gate.HasUnknownTarget()) entered[gate.target] = true;
  }
  for (int i = 0; i < count; ++i) {
    const std::string& id = matrix.locations[i].id;
    if (i != matrix.halt && matrix.Column(i).empty()) {
      findings.push_back({Severity::kWarning, "EMPTY-COLUMN", id,
                          fmt::format("location {} has no outgoing gates", id)});
    }
    if (i != matrix.start && !entered[i]) {
      findings.push_back(
          {Severity::kWarning, "UNREACHABLE-LOCATION", id,
           fmt::format("no gate leads to location {}", id)});
    }
  }
  return findings;
}

std::vector<Finding> CheckFindings(const CodeMatrix& matrix) {
  std::vector<Finding> findings = Validate(matrix);
  for (auto& hole : FindHoles(matrix)) {
    bool seen = std::any_of(findings.begin(), findings.end(),
                            [&](const Finding& f) {
                              return f.code == hole.code && f.site == hole.site;
                            });
    if (!seen) findings.push_back(std::move(hole));
  }
  return findings;
}

}  // namespace mcx
