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

#include "mcx/syntax/printer.h"

#include <fmt/core.h>

namespace mcx {
namespace {

std::string KindText(VarKind kind) {
  return kind == VarKind::kInt ? "int" : "array[int]";
}

}  // namespace

std::string PrintMatrix(const CodeMatrix& matrix) {
  std::string out = fmt::format("matrix {}(", matrix.name);
  bool first = true;
  for (const auto& v : matrix.variables) {
    if (!v.is_param) continue;
    out += fmt::format("{}{}: {}", first ? "" : ", ", v.name, KindText(v.kind));
    first = false;
  }
  out += ")\n";

  std::string locals;
  for (const auto& v : matrix.variables) {
    if (v.is_param) continue;
    locals += locals.empty() ? v.name : ", " + v.name;
  }
  if (!locals.empty()) out += fmt::format("var {}: int\n", locals);

  for (const auto& pred : matrix.predicates) {
    std::string params;
    for (const auto& p : pred.params) {
      if (!params.empty()) params += ", ";
      params += fmt::format("{}: {}", p.name, KindText(p.kind));
    }
    out += fmt::format("pred {}({}) := {}\n", pred.name, params,
                       pred.body->text);
  }
  for (const auto& loc : matrix.locations) {
    if (loc.assertion) {
      out += fmt::format("location {}: assert {}\n", loc.id,
                         loc.assertion->text);
    } else {
      out += fmt::format("location {}\n", loc.id);
    }
  }
  out += fmt::format("start {}\nhalt {}\n", matrix.locations[matrix.start].id,
                     matrix.locations[matrix.halt].id);
  for (const auto& gate : matrix.gates) {
    std::string steps;
    for (const auto& step : gate.steps) {
      if (!steps.empty()) steps += "; ";
      steps += FormatStep(step);
    }
    out += fmt::format(
        "gate {} -> {}: {}\n", matrix.locations[gate.source].id,
        gate.HasUnknownTarget() ? "?" : matrix.locations[gate.target].id,
        steps);
  }
  return out;
}

}  // namespace mcx
