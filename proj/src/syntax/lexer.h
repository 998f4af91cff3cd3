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

#ifndef MCX_SRC_SYNTAX_LEXER_H_
#define MCX_SRC_SYNTAX_LEXER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mcx/syntax/ast.h"
#include "mcx/syntax/parser.h"

namespace mcx::internal {

enum class Tok {
  kEnd,
  kIdent,
  kInt,
  kString,
  // keywords
  kMatrix,
  kVar,
  kPred,
  kLocation,
  kStart,
  kHalt,
  kGate,
  kAssert,
  kWhen,
  kTodo,
  kForall,
  kExists,
  kIn,
  kIntType,
  kArray,
  kTrue,
  kFalse,
  kLen,
  // punctuation
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kColon,
  kSemicolon,
  kDefine,    // :=
  kArrow,     // ->
  kQuestion,
  kDotDot,
  kAt,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kPercent,
  kEqEq,
  kNotEq,
  kLess,
  kLessEq,
  kGreater,
  kGreaterEq,
  kAndAnd,
  kOrOr,
  kBang,
  kAssign,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string lexeme;  // identifier name, string contents, or raw spelling
  int64_t int_value = 0;
  SourceLoc loc;
  bool space_before = false;
};

// Produces the token stream terminated by kEnd. Lexical problems are
// appended to `errors`; the offending characters are skipped.
std::vector<Token> Lex(std::string_view text, std::vector<ParseError>& errors);

std::string_view TokName(Tok kind);

}  // namespace mcx::internal

#endif  // MCX_SRC_SYNTAX_LEXER_H_
