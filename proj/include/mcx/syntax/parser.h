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

#ifndef MCX_SYNTAX_PARSER_H_
#define MCX_SYNTAX_PARSER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcx/syntax/ast.h"

namespace mcx {

struct ParseError {
  SourceLoc loc;
  std::string message;

  std::string ToString() const;
};

struct ParseResult {
  // Set only when `errors` is empty.
  std::optional<CodeMatrix> matrix;
  std::vector<ParseError> errors;

  bool ok() const { return matrix.has_value(); }
};

// Parses, resolves and type-checks a `.mcx` document.
//
// Declarations may appear in any order after the header, except that a
// predicate may only call predicates declared before it. Identifiers in
// predicate bodies refer to the predicate's own parameters and quantifier
// variables; matrix variables are not visible there.
ParseResult ParseMatrix(std::string_view text);

}  // namespace mcx

#endif  // MCX_SYNTAX_PARSER_H_
