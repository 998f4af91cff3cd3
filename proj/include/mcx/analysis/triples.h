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

#ifndef MCX_ANALYSIS_TRIPLES_H_
#define MCX_ANALYSIS_TRIPLES_H_

#include <string>
#include <vector>

#include "mcx/syntax/ast.h"
#include "mcx/syntax/validate.h"

namespace mcx {

// {pre && guards} statements {post}, one per executable gate.
struct HoareTriple {
  int gate = -1;
  int pre_location = -1;
  std::vector<ExprPtr> guards;
  std::vector<AssignStep> statements;
  int post_location = -1;
  int column_index = 0;
};

// Ordered by column (location declaration order), then by position within
// the column. Todo gates have no triple; each one skipped is reported in
// `skipped` when given.
std::vector<HoareTriple> ExtractTriples(const CodeMatrix& matrix,
                                        std::vector<Finding>* skipped = nullptr);

// `{A && k < N} j = p[k-1]+2; n = 0 {B}`; empty parts are omitted.
std::string RenderTriple(const CodeMatrix& matrix, const HoareTriple& triple);

}  // namespace mcx

#endif  // MCX_ANALYSIS_TRIPLES_H_
