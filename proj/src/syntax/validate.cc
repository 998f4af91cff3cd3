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

#include "mcx/syntax/validate.h"

#include <fmt/core.h>

namespace mcx {

std::string Finding::ToString() const {
  return fmt::format("{} {} {}: {}",
                     severity == Severity::kError ? "error" : "warning", code,
                     site, message);
}

std::string GateSite(const CodeMatrix& matrix, const GateDecl& gate) {
  return fmt::format(
      "{}->{}", matrix.locations[gate.source].id,
      gate.HasUnknownTarget() ? "?" : matrix.locations[gate.target].id);
}

std::vector<Finding> Validate(const CodeMatrix& matrix) {
  std::vector<Finding> findings;
  auto warn = [&](std::string code, std::string site, std::string message) {
    findings.push_back({Severity::kWarning, std::move(code), std::move(site),
                        std::move(message)});
  };

  for (const auto& gate : matrix.gates) {
    std::string site = GateSite(matrix, gate);
    bool seen_assign = false;
    for (const auto& step : gate.steps) {
      if (std::holds_alternative<AssignStep>(step)) {
        seen_assign = true;
      } else if (const auto* guard = std::get_if<GuardStep>(&step);
                 guard && seen_assign) {
        warn("GUARDS-FIRST-VIOLATION", site,
             fmt::format("assignment precedes guard '{}'",
                         guard->condition->text));
        break;
      }
    }
    if (gate.IsTodo()) {
      warn("TODO-GATE", site,
           fmt::format("gate body unknown: {}",
                       std::get<TodoStep>(gate.steps.front()).note));
    }
    if (gate.source == matrix.halt) {
      warn("GATE-FROM-HALT", site,
           fmt::format("column {} is never executed",
                       matrix.locations[matrix.halt].id));
    }
    if (gate.target == matrix.start) {
      warn("GATE-INTO-START", site,
           fmt::format("gate re-enters start location {}",
                       matrix.locations[matrix.start].id));
    }
  }

  for (int i = 0; i < static_cast<int>(matrix.locations.size()); ++i) {
    if (i != matrix.halt && matrix.Column(i).empty()) {
      warn("EMPTY-COLUMN", matrix.locations[i].id,
           fmt::format("location {} has no outgoing gates",
                       matrix.locations[i].id));
    }
  }
  return findings;
}

}  // namespace mcx
