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

#include "lexer.h"

#include <cctype>
#include <charconv>
#include <unordered_map>

#include <fmt/core.h>

namespace mcx::internal {
namespace {

const std::unordered_map<std::string_view, Tok>& Keywords() {
  static const auto* keywords = new std::unordered_map<std::string_view, Tok>{
      {"matrix", Tok::kMatrix},   {"var", Tok::kVar},
      {"pred", Tok::kPred},       {"location", Tok::kLocation},
      {"start", Tok::kStart},     {"halt", Tok::kHalt},
      {"gate", Tok::kGate},       {"assert", Tok::kAssert},
      {"when", Tok::kWhen},       {"todo", Tok::kTodo},
      {"forall", Tok::kForall},   {"exists", Tok::kExists},
      {"in", Tok::kIn},           {"int", Tok::kIntType},
      {"array", Tok::kArray},     {"true", Tok::kTrue},
      {"false", Tok::kFalse},     {"len", Tok::kLen},
  };
  return *keywords;
}

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  Lexer(std::string_view text, std::vector<ParseError>& errors)
      : text_(text), errors_(errors) {}

  std::vector<Token> Run() {
    std::vector<Token> tokens;
    while (true) {
      bool space = SkipTrivia();
      Token tok;
      tok.loc = {line_, column_};
      tok.space_before = space;
      if (pos_ >= text_.size()) {
        tok.kind = Tok::kEnd;
        tokens.push_back(std::move(tok));
        return tokens;
      }
      if (Scan(tok)) tokens.push_back(std::move(tok));
    }
  }

 private:
  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  // Whitespace and `//` comments. Returns whether anything was skipped.
  bool SkipTrivia() {
    bool skipped = false;
    while (pos_ < text_.size()) {
      char c = Peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (c == '/' && Peek(1) == '/') {
        while (pos_ < text_.size() && Peek() != '\n') Advance();
      } else {
        break;
      }
      skipped = true;
    }
    return skipped;
  }

  void Error(SourceLoc loc, std::string message) {
    errors_.push_back({loc, std::move(message)});
  }

  bool Scan(Token& tok) {
    char c = Peek();
    size_t begin = pos_;
    if (IsIdentStart(c)) {
      while (IsIdentChar(Peek())) Advance();
      tok.lexeme = std::string(text_.substr(begin, pos_ - begin));
      auto it = Keywords().find(tok.lexeme);
      tok.kind = it == Keywords().end() ? Tok::kIdent : it->second;
      return true;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (std::isdigit(static_cast<unsigned char>(Peek()))) Advance();
      tok.lexeme = std::string(text_.substr(begin, pos_ - begin));
      tok.kind = Tok::kInt;
      auto [ptr, ec] = std::from_chars(
          tok.lexeme.data(), tok.lexeme.data() + tok.lexeme.size(),
          tok.int_value);
      if (ec != std::errc()) {
        Error(tok.loc, fmt::format("integer literal {} out of range",
                                   tok.lexeme));
        return false;
      }
      if (IsIdentStart(Peek())) {
        Error(tok.loc, "malformed number");
        while (IsIdentChar(Peek())) Advance();
        return false;
      }
      return true;
    }
    if (c == '"') {
      Advance();
      std::string value;
      while (true) {
        if (pos_ >= text_.size() || Peek() == '\n') {
          Error(tok.loc, "unterminated string literal");
          return false;
        }
        char ch = Peek();
        Advance();
        if (ch == '"') break;
        if (ch == '\\' && pos_ < text_.size()) {
          ch = Peek();
          Advance();
        }
        value += ch;
      }
      tok.kind = Tok::kString;
      tok.lexeme = std::move(value);
      return true;
    }
    auto two = [&](char a, char b, Tok kind) {
      if (c == a && Peek(1) == b) {
        Advance();
        Advance();
        tok.kind = kind;
        return true;
      }
      return false;
    };
    if (two(':', '=', Tok::kDefine) || two('-', '>', Tok::kArrow) ||
        two('.', '.', Tok::kDotDot) || two('=', '=', Tok::kEqEq) ||
        two('!', '=', Tok::kNotEq) || two('<', '=', Tok::kLessEq) ||
        two('>', '=', Tok::kGreaterEq) || two('&', '&', Tok::kAndAnd) ||
        two('|', '|', Tok::kOrOr)) {
      tok.lexeme = std::string(text_.substr(begin, 2));
      return true;
    }
    static const std::unordered_map<char, Tok> kSingle = {
        {'(', Tok::kLParen},   {')', Tok::kRParen},  {'[', Tok::kLBracket},
        {']', Tok::kRBracket}, {',', Tok::kComma},   {':', Tok::kColon},
        {';', Tok::kSemicolon}, {'?', Tok::kQuestion}, {'@', Tok::kAt},
        {'+', Tok::kPlus},     {'-', Tok::kMinus},   {'*', Tok::kStar},
        {'/', Tok::kSlash},    {'%', Tok::kPercent}, {'<', Tok::kLess},
        {'>', Tok::kGreater},  {'!', Tok::kBang},    {'=', Tok::kAssign},
    };
    Advance();
    auto it = kSingle.find(c);
    if (it == kSingle.end()) {
      Error(tok.loc, fmt::format("unexpected character '{}'", c));
      return false;
    }
    tok.kind = it->second;
    tok.lexeme = std::string(1, c);
    return true;
  }

  std::string_view text_;
  std::vector<ParseError>& errors_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::vector<Token> Lex(std::string_view text,
                       std::vector<ParseError>& errors) {
  return Lexer(text, errors).Run();
}

std::string_view TokName(Tok kind) {
  switch (kind) {
    case Tok::kEnd: return "end of input";
    case Tok::kIdent: return "identifier";
    case Tok::kInt: return "integer";
    case Tok::kString: return "string";
    case Tok::kMatrix: return "'matrix'";
    case Tok::kVar: return "'var'";
    case Tok::kPred: return "'pred'";
    case Tok::kLocation: return "'location'";
    case Tok::kStart: return "'start'";
    case Tok::kHalt: return "'halt'";
    case Tok::kGate: return "'gate'";
    case Tok::kAssert: return "'assert'";
    case Tok::kWhen: return "'when'";
    case Tok::kTodo: return "'todo'";
    case Tok::kForall: return "'forall'";
    case Tok::kExists: return "'exists'";
    case Tok::kIn: return "'in'";
    case Tok::kIntType: return "'int'";
    case Tok::kArray: return "'array'";
    case Tok::kTrue: return "'true'";
    case Tok::kFalse: return "'false'";
    case Tok::kLen: return "'len'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kComma: return "','";
    case Tok::kColon: return "':'";
    case Tok::kSemicolon: return "';'";
    case Tok::kDefine: return "':='";
    case Tok::kArrow: return "'->'";
    case Tok::kQuestion: return "'?'";
    case Tok::kDotDot: return "'..'";
    case Tok::kAt: return "'@'";
    case Tok::kPlus: return "'+'";
    case Tok::kMinus: return "'-'";
    case Tok::kStar: return "'*'";
    case Tok::kSlash: return "'/'";
    case Tok::kPercent: return "'%'";
    case Tok::kEqEq: return "'=='";
    case Tok::kNotEq: return "'!='";
    case Tok::kLess: return "'<'";
    case Tok::kLessEq: return "'<='";
    case Tok::kGreater: return "'>'";
    case Tok::kGreaterEq: return "'>='";
    case Tok::kAndAnd: return "'&&'";
    case Tok::kOrOr: return "'||'";
    case Tok::kBang: return "'!'";
    case Tok::kAssign: return "'='";
  }
  return "token";
}

}  // namespace mcx::internal
