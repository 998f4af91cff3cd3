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

#include "mcx/syntax/parser.h"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <utility>

#include <fmt/core.h>

#include "lexer.h"

namespace mcx {

std::string ParseError::ToString() const {
  return fmt::format("{}:{}: {}", loc.line, loc.column, message);
}

namespace {

using internal::Tok;
using internal::Token;

using MutExpr = std::shared_ptr<Expr>;

struct RawParam {
  std::string name;
  VarKind kind = VarKind::kInt;
  SourceLoc loc;
};

struct RawPred {
  std::string name;
  std::vector<RawParam> params;
  ExprPtr body;
  SourceLoc loc;
};

struct RawLocation {
  std::string id;
  ExprPtr assertion;
  SourceLoc loc;
};

struct RawName {
  std::string name;
  SourceLoc loc;
};

struct RawGate {
  RawName source;
  std::optional<RawName> target;  // nullopt for '?'
  std::vector<GateStep> steps;
  SourceLoc loc;
};

struct RawMatrix {
  std::string name;
  std::vector<RawParam> params;
  std::vector<RawParam> locals;
  std::vector<RawPred> preds;
  std::vector<RawLocation> locations;
  std::vector<RawName> starts;
  std::vector<RawName> halts;
  std::vector<RawGate> gates;
};

struct SyntaxError {};

enum class ExprMode { kExpr, kPredBody, kAssertion };

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<ParseError>& errors)
      : toks_(std::move(tokens)), errors_(errors) {}

  RawMatrix Parse() {
    RawMatrix m;
    try {
      Expect(Tok::kMatrix, "'matrix' header");
      m.name = Expect(Tok::kIdent, "matrix name").lexeme;
      m.params = ParseParams();
    } catch (const SyntaxError&) {
      Synchronize();
    }
    while (!At(Tok::kEnd)) {
      try {
        ParseDecl(m);
      } catch (const SyntaxError&) {
        Synchronize();
      }
    }
    return m;
  }

 private:
  const Token& Cur() const { return toks_[pos_]; }
  bool At(Tok kind) const { return Cur().kind == kind; }

  const Token& Next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::kEnd) ++pos_;
    return t;
  }

  bool Accept(Tok kind) {
    if (!At(kind)) return false;
    Next();
    return true;
  }

  [[noreturn]] void Fail(const Token& at, std::string message) {
    errors_.push_back({at.loc, std::move(message)});
    throw SyntaxError{};
  }

  [[noreturn]] void Unexpected(std::string_view wanted) {
    std::string found = At(Tok::kIdent) || At(Tok::kInt)
                            ? fmt::format("'{}'", Cur().lexeme)
                            : std::string(internal::TokName(Cur().kind));
    Fail(Cur(), fmt::format("expected {}, found {}", wanted, found));
  }

  const Token& Expect(Tok kind, std::string_view wanted) {
    if (!At(kind)) Unexpected(wanted);
    return Next();
  }

  static bool IsDeclStart(Tok kind) {
    switch (kind) {
      case Tok::kVar:
      case Tok::kPred:
      case Tok::kLocation:
      case Tok::kStart:
      case Tok::kHalt:
      case Tok::kGate:
      case Tok::kEnd:
        return true;
      default:
        return false;
    }
  }

  void Synchronize() {
    Next();
    while (!IsDeclStart(Cur().kind)) Next();
  }

  std::string Spell(size_t begin, size_t end) const {
    std::string out;
    for (size_t i = begin; i < end; ++i) {
      const Token& t = toks_[i];
      if (i != begin && t.space_before) out += ' ';
      out += t.lexeme;
    }
    return out;
  }

  MutExpr Node(ExprKind kind, size_t begin) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->loc = toks_[begin].loc;
    return e;
  }

  MutExpr Finish(MutExpr e, size_t begin) {
    e->text = Spell(begin, pos_);
    return e;
  }

  VarKind ParseKind() {
    if (Accept(Tok::kIntType)) return VarKind::kInt;
    if (Accept(Tok::kArray)) {
      Expect(Tok::kLBracket, "'['");
      Expect(Tok::kIntType, "'int'");
      Expect(Tok::kRBracket, "']'");
      return VarKind::kIntArray;
    }
    Unexpected("'int' or 'array[int]'");
  }

  std::vector<RawParam> ParseParams() {
    std::vector<RawParam> params;
    Expect(Tok::kLParen, "'('");
    if (!At(Tok::kRParen)) {
      do {
        const Token& id = Expect(Tok::kIdent, "parameter name");
        Expect(Tok::kColon, "':'");
        params.push_back({id.lexeme, ParseKind(), id.loc});
      } while (Accept(Tok::kComma));
    }
    Expect(Tok::kRParen, "')'");
    return params;
  }

  void ParseDecl(RawMatrix& m) {
    const Token& kw = Cur();
    switch (kw.kind) {
      case Tok::kVar: {
        Next();
        std::vector<RawParam> names;
        do {
          const Token& id = Expect(Tok::kIdent, "variable name");
          names.push_back({id.lexeme, VarKind::kInt, id.loc});
        } while (Accept(Tok::kComma));
        Expect(Tok::kColon, "':'");
        Expect(Tok::kIntType, "'int'");
        m.locals.insert(m.locals.end(), names.begin(), names.end());
        return;
      }
      case Tok::kPred: {
        Next();
        const Token& id = Expect(Tok::kIdent, "predicate name");
        RawPred pred{id.lexeme, ParseParams(), nullptr, id.loc};
        Expect(Tok::kDefine, "':='");
        pred.body = ParseFormula(ExprMode::kPredBody);
        m.preds.push_back(std::move(pred));
        return;
      }
      case Tok::kLocation: {
        Next();
        const Token& id = Expect(Tok::kIdent, "location name");
        RawLocation loc{id.lexeme, nullptr, id.loc};
        if (Accept(Tok::kColon)) {
          Expect(Tok::kAssert, "'assert'");
          loc.assertion = ParseFormula(ExprMode::kAssertion);
        }
        m.locations.push_back(std::move(loc));
        return;
      }
      case Tok::kStart:
      case Tok::kHalt: {
        Next();
        const Token& id = Expect(Tok::kIdent, "location name");
        (kw.kind == Tok::kStart ? m.starts : m.halts)
            .push_back({id.lexeme, id.loc});
        return;
      }
      case Tok::kGate:
        m.gates.push_back(ParseGate());
        return;
      default:
        Unexpected("a declaration");
    }
  }

  RawGate ParseGate() {
    RawGate gate;
    gate.loc = Next().loc;
    const Token& src = Expect(Tok::kIdent, "source location");
    gate.source = {src.lexeme, src.loc};
    Expect(Tok::kArrow, "'->'");
    if (!Accept(Tok::kQuestion)) {
      const Token& dst = Expect(Tok::kIdent, "target location or '?'");
      gate.target = RawName{dst.lexeme, dst.loc};
    }
    Expect(Tok::kColon, "':'");
    do {
      gate.steps.push_back(ParseStep());
    } while (Accept(Tok::kSemicolon));
    return gate;
  }

  GateStep ParseStep() {
    if (Accept(Tok::kWhen)) return GuardStep{ParseFormula(ExprMode::kExpr)};
    if (Accept(Tok::kTodo)) {
      return TodoStep{Expect(Tok::kString, "todo note string").lexeme};
    }
    const Token& id = Expect(Tok::kIdent, "'when', 'todo' or an assignment");
    AssignStep assign;
    assign.target = id.lexeme;
    assign.loc = id.loc;
    if (Accept(Tok::kLBracket)) {
      assign.index = ParseFormula(ExprMode::kExpr);
      Expect(Tok::kRBracket, "']'");
    }
    Expect(Tok::kAssign, "'='");
    assign.value = ParseFormula(ExprMode::kExpr);
    return assign;
  }

  MutExpr ParseFormula(ExprMode mode) { return ParseOr(mode); }

  MutExpr ParseBinaryLevel(ExprMode mode,
                           const std::vector<std::pair<Tok, Op>>& ops,
                           MutExpr (Parser::*operand)(ExprMode),
                           bool chain) {
    size_t begin = pos_;
    MutExpr lhs = (this->*operand)(mode);
    while (true) {
      auto it = std::find_if(ops.begin(), ops.end(),
                             [&](const auto& p) { return At(p.first); });
      if (it == ops.end()) return lhs;
      Next();
      MutExpr rhs = (this->*operand)(mode);
      auto e = Node(ExprKind::kBinary, begin);
      e->op = it->second;
      e->operands = {lhs, rhs};
      lhs = Finish(e, begin);
      if (!chain) return lhs;
    }
  }

  MutExpr ParseOr(ExprMode mode) {
    static const std::vector<std::pair<Tok, Op>> kOps = {{Tok::kOrOr, Op::kOr}};
    return ParseBinaryLevel(mode, kOps, &Parser::ParseAnd, true);
  }

  MutExpr ParseAnd(ExprMode mode) {
    static const std::vector<std::pair<Tok, Op>> kOps = {
        {Tok::kAndAnd, Op::kAnd}};
    return ParseBinaryLevel(mode, kOps, &Parser::ParseComparison, true);
  }

  MutExpr ParseComparison(ExprMode mode) {
    static const std::vector<std::pair<Tok, Op>> kOps = {
        {Tok::kEqEq, Op::kEq},   {Tok::kNotEq, Op::kNe},
        {Tok::kLess, Op::kLt},   {Tok::kLessEq, Op::kLe},
        {Tok::kGreater, Op::kGt}, {Tok::kGreaterEq, Op::kGe}};
    return ParseBinaryLevel(mode, kOps, &Parser::ParseAdditive, false);
  }

  MutExpr ParseAdditive(ExprMode mode) {
    static const std::vector<std::pair<Tok, Op>> kOps = {
        {Tok::kPlus, Op::kAdd}, {Tok::kMinus, Op::kSub}};
    return ParseBinaryLevel(mode, kOps, &Parser::ParseMultiplicative, true);
  }

  MutExpr ParseMultiplicative(ExprMode mode) {
    static const std::vector<std::pair<Tok, Op>> kOps = {
        {Tok::kStar, Op::kMul}, {Tok::kSlash, Op::kDiv},
        {Tok::kPercent, Op::kMod}};
    return ParseBinaryLevel(mode, kOps, &Parser::ParseUnary, true);
  }

  MutExpr ParseUnary(ExprMode mode) {
    size_t begin = pos_;
    if (At(Tok::kMinus) || At(Tok::kBang)) {
      Op op = Next().kind == Tok::kMinus ? Op::kNeg : Op::kNot;
      auto e = Node(ExprKind::kUnary, begin);
      e->op = op;
      e->operands = {ParseUnary(mode)};
      return Finish(e, begin);
    }
    return ParsePrimary(mode);
  }

  MutExpr ParsePrimary(ExprMode mode) {
    size_t begin = pos_;
    const Token& t = Cur();
    switch (t.kind) {
      case Tok::kInt: {
        Next();
        auto e = Node(ExprKind::kIntLit, begin);
        e->int_value = t.int_value;
        return Finish(e, begin);
      }
      case Tok::kTrue:
      case Tok::kFalse: {
        Next();
        auto e = Node(ExprKind::kBoolLit, begin);
        e->bool_value = t.kind == Tok::kTrue;
        e->type = Type::kBool;
        return Finish(e, begin);
      }
      case Tok::kLParen: {
        Next();
        MutExpr inner = ParseFormula(mode);
        Expect(Tok::kRParen, "')'");
        return Finish(inner, begin);
      }
      case Tok::kLen: {
        Next();
        Expect(Tok::kLParen, "'('");
        auto e = Node(ExprKind::kLen, begin);
        e->name = Expect(Tok::kIdent, "array name").lexeme;
        Expect(Tok::kRParen, "')'");
        return Finish(e, begin);
      }
      case Tok::kForall:
      case Tok::kExists: {
        if (mode == ExprMode::kExpr) {
          Fail(t, "quantifiers are only allowed in assertions and predicates");
        }
        Next();
        auto e = Node(t.kind == Tok::kForall ? ExprKind::kForall
                                             : ExprKind::kExists,
                      begin);
        e->name = Expect(Tok::kIdent, "bound variable").lexeme;
        Expect(Tok::kIn, "'in'");
        MutExpr lo = ParseAdditive(mode);
        Expect(Tok::kDotDot, "'..'");
        MutExpr hi = ParseAdditive(mode);
        Expect(Tok::kColon, "':'");
        MutExpr body = ParseFormula(mode);
        e->operands = {lo, hi, body};
        e->type = Type::kBool;
        return Finish(e, begin);
      }
      case Tok::kAt: {
        if (mode != ExprMode::kAssertion) {
          Fail(t, "assertion inclusion '@' is only allowed in location "
                  "assertions");
        }
        Next();
        auto e = Node(ExprKind::kInclude, begin);
        e->name = Expect(Tok::kIdent, "location name").lexeme;
        e->type = Type::kBool;
        return Finish(e, begin);
      }
      case Tok::kIdent: {
        Next();
        if (At(Tok::kLParen)) {
          if (mode == ExprMode::kExpr) {
            Fail(t, fmt::format("predicate call '{}' is only allowed in "
                                "assertions and predicates",
                                t.lexeme));
          }
          Next();
          auto e = Node(ExprKind::kPredCall, begin);
          e->name = t.lexeme;
          e->type = Type::kBool;
          if (!At(Tok::kRParen)) {
            do {
              e->operands.push_back(ParseFormula(mode));
            } while (Accept(Tok::kComma));
          }
          Expect(Tok::kRParen, "')'");
          return Finish(e, begin);
        }
        if (Accept(Tok::kLBracket)) {
          auto e = Node(ExprKind::kIndex, begin);
          e->name = t.lexeme;
          e->operands = {ParseFormula(mode)};
          Expect(Tok::kRBracket, "']'");
          return Finish(e, begin);
        }
        auto e = Node(ExprKind::kVar, begin);
        e->name = t.lexeme;
        return Finish(e, begin);
      }
      default:
        Unexpected("an expression");
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::vector<ParseError>& errors_;
};

// ---------------------------------------------------------------------------
// Name resolution and type checking.

struct FrameVar {
  std::string name;
  Type type;
  int slot;
};

class Resolver {
 public:
  Resolver(const RawMatrix& raw, std::vector<ParseError>& errors)
      : raw_(raw), errors_(errors) {}

  std::optional<CodeMatrix> Run() {
    size_t before = errors_.size();
    CodeMatrix m;
    m.name = raw_.name;
    DeclareVariables(m);
    DeclarePredicates(m);
    DeclareLocations(m);
    ResolveStartHalt(m);
    ResolveAssertions(m);
    ResolveGates(m);
    if (errors_.size() != before) return std::nullopt;
    m.IndexGates();
    return m;
  }

 private:
  void Error(SourceLoc loc, std::string message) {
    errors_.push_back({loc, std::move(message)});
  }

  void DeclareVariables(CodeMatrix& m) {
    auto add = [&](const RawParam& p, bool is_param) {
      if (m.FindVariable(p.name)) {
        Error(p.loc, fmt::format("duplicate variable {}", p.name));
        return;
      }
      m.variables.push_back({p.name, p.kind, is_param, -1, p.loc});
    };
    for (const auto& p : raw_.params) add(p, true);
    for (const auto& p : raw_.locals) add(p, false);
    m.CountSlots();
  }

  void DeclarePredicates(CodeMatrix& m) {
    globals_ = &m;
    for (const auto& rp : raw_.preds) {
      bool clash = m.FindVariable(rp.name) != nullptr;
      if (clash) {
        Error(rp.loc,
              fmt::format("predicate {} clashes with a variable", rp.name));
      }
      if (FindPredicate(m, rp.name)) {
        Error(rp.loc, fmt::format("duplicate predicate {}", rp.name));
        clash = true;
      }
      Predicate pred{rp.name, {}, rp.body, rp.loc};
      std::vector<FrameVar> frame;
      std::set<std::string> seen;
      for (const auto& p : rp.params) {
        if (!seen.insert(p.name).second) {
          Error(p.loc, fmt::format("duplicate parameter {} of predicate {}",
                                   p.name, rp.name));
        }
        pred.params.push_back({p.name, p.kind});
        frame.push_back({p.name,
                         p.kind == VarKind::kInt ? Type::kInt : Type::kArray,
                         static_cast<int>(frame.size())});
      }
      // The predicate being declared is not yet visible: no recursion.
      visible_preds_ = static_cast<int>(m.predicates.size());
      in_predicate_ = true;
      ExpectType(*rp.body, Type::kBool, frame, "predicate body");
      in_predicate_ = false;
      if (!clash) m.predicates.push_back(std::move(pred));
    }
    visible_preds_ = static_cast<int>(m.predicates.size());
  }

  static const Predicate* FindPredicate(const CodeMatrix& m,
                                        std::string_view name,
                                        int* index = nullptr) {
    for (size_t i = 0; i < m.predicates.size(); ++i) {
      if (m.predicates[i].name == name) {
        if (index) *index = static_cast<int>(i);
        return &m.predicates[i];
      }
    }
    return nullptr;
  }

  void DeclareLocations(CodeMatrix& m) {
    for (const auto& rl : raw_.locations) {
      if (m.FindLocation(rl.id)) {
        Error(rl.loc, fmt::format("duplicate location {}", rl.id));
        continue;
      }
      m.locations.push_back({rl.id, rl.assertion, rl.loc});
    }
  }

  void ResolveStartHalt(CodeMatrix& m) {
    auto resolve = [&](const std::vector<RawName>& decls,
                       std::string_view what) -> int {
      if (decls.empty()) {
        Error({1, 1}, fmt::format("missing {} declaration", what));
        return -1;
      }
      for (size_t i = 1; i < decls.size(); ++i) {
        Error(decls[i].loc, fmt::format("duplicate {} declaration", what));
      }
      auto index = m.FindLocation(decls[0].name);
      if (!index) {
        Error(decls[0].loc,
              fmt::format("unknown {} location {}", what, decls[0].name));
        return -1;
      }
      return *index;
    };
    m.start = resolve(raw_.starts, "start");
    m.halt = resolve(raw_.halts, "halt");
    if (m.start >= 0 && m.start == m.halt) {
      Error(raw_.halts[0].loc, "start and halt must be distinct locations");
    }
  }

  void ResolveAssertions(CodeMatrix& m) {
    for (const auto& loc : m.locations) {
      if (loc.assertion) {
        ExpectType(*loc.assertion, Type::kBool, {}, "assertion");
      }
    }
    // Inclusion cycles (@A inside A, directly or indirectly).
    std::vector<int> state(m.locations.size(), 0);
    std::function<bool(int)> visit = [&](int i) -> bool {
      if (state[i] == 1) return false;
      if (state[i] == 2) return true;
      state[i] = 1;
      bool ok = true;
      if (m.locations[i].assertion) {
        ForEachInclude(*m.locations[i].assertion, [&](const Expr& inc) {
          if (ok && inc.target >= 0 && !visit(inc.target)) {
            Error(inc.loc, fmt::format("assertion of {} includes itself",
                                       m.locations[i].id));
            ok = false;
          }
        });
      }
      state[i] = 2;
      return ok;
    };
    for (size_t i = 0; i < m.locations.size(); ++i) {
      if (state[i] == 0) visit(static_cast<int>(i));
    }
  }

  static void ForEachInclude(const Expr& e,
                             const std::function<void(const Expr&)>& fn) {
    if (e.kind == ExprKind::kInclude) fn(e);
    for (const auto& op : e.operands) ForEachInclude(*op, fn);
  }

  void ResolveGates(CodeMatrix& m) {
    for (const auto& rg : raw_.gates) {
      GateDecl gate;
      gate.loc = rg.loc;
      bool ok = true;
      auto lookup = [&](const RawName& n) {
        auto index = m.FindLocation(n.name);
        if (!index) {
          Error(n.loc, fmt::format("unknown location {} in gate", n.name));
          ok = false;
          return -1;
        }
        return *index;
      };
      gate.source = lookup(rg.source);
      gate.target = rg.target ? lookup(*rg.target) : kUnknownTarget;
      bool has_todo = false;
      for (const auto& step : rg.steps) {
        if (std::holds_alternative<TodoStep>(step)) has_todo = true;
      }
      if (has_todo && rg.steps.size() != 1) {
        Error(rg.loc, "todo must be the only step of a gate");
        ok = false;
      }
      if (!rg.target && !has_todo) {
        Error(rg.loc, "a gate with unknown target '?' must be a todo gate");
        ok = false;
      }
      for (const auto& step : rg.steps) {
        GateStep resolved = step;
        if (auto* guard = std::get_if<GuardStep>(&resolved)) {
          ExpectType(*guard->condition, Type::kBool, {}, "guard");
        } else if (auto* assign = std::get_if<AssignStep>(&resolved)) {
          ok = ResolveAssign(*assign) && ok;
        }
        gate.steps.push_back(std::move(resolved));
      }
      if (ok) m.gates.push_back(std::move(gate));
    }
  }

  bool ResolveAssign(AssignStep& assign) {
    const Variable* var = globals_->FindVariable(assign.target);
    bool ok = true;
    if (!var) {
      Error(assign.loc, fmt::format("unknown variable {}", assign.target));
      ok = false;
    } else if (assign.index && var->kind != VarKind::kIntArray) {
      Error(assign.loc, fmt::format("{} is not an array", assign.target));
      ok = false;
    } else if (!assign.index && var->kind == VarKind::kIntArray) {
      Error(assign.loc,
            fmt::format("cannot assign to array {} without an index",
                        assign.target));
      ok = false;
    } else {
      assign.binding = {Binding::Scope::kGlobal, var->slot};
    }
    if (assign.index) ExpectType(*assign.index, Type::kInt, {}, "index");
    ExpectType(*assign.value, Type::kInt, {}, "assigned value");
    return ok;
  }

  static std::string_view TypeName(Type t) {
    switch (t) {
      case Type::kInt: return "int";
      case Type::kBool: return "bool";
      case Type::kArray: return "array";
    }
    return "?";
  }

  void ExpectType(const Expr& e, Type want, std::vector<FrameVar> frame,
                  std::string_view what) {
    auto got = Check(e, frame);
    if (got && *got != want) {
      Error(e.loc, fmt::format("type error: {} '{}' has type {}, expected {}",
                               what, e.text, TypeName(*got), TypeName(want)));
    }
  }

  std::optional<Type> Lookup(const Expr& e, std::vector<FrameVar>& frame,
                             Binding& binding) {
    for (auto it = frame.rbegin(); it != frame.rend(); ++it) {
      if (it->name == e.name) {
        binding = {Binding::Scope::kFrame, it->slot};
        return it->type;
      }
    }
    if (!in_predicate_) {
      if (const Variable* v = globals_->FindVariable(e.name)) {
        binding = {Binding::Scope::kGlobal, v->slot};
        return v->kind == VarKind::kInt ? Type::kInt : Type::kArray;
      }
    }
    Error(e.loc, fmt::format("unknown identifier {}", e.name));
    return std::nullopt;
  }

  bool Operand(const Expr& e, Type want, std::vector<FrameVar>& frame) {
    auto got = Check(e, frame);
    if (!got) return false;
    if (*got != want) {
      Error(e.loc, fmt::format("type error: '{}' has type {}, expected {}",
                               e.text, TypeName(*got), TypeName(want)));
      return false;
    }
    return true;
  }

  // Annotates `ce` with its type and bindings. The nodes are still owned
  // exclusively by this parse, so writing through the const view is safe.
  std::optional<Type> Check(const Expr& ce, std::vector<FrameVar>& frame) {
    Expr& e = const_cast<Expr&>(ce);
    switch (e.kind) {
      case ExprKind::kIntLit:
        return e.type = Type::kInt;
      case ExprKind::kBoolLit:
        return e.type = Type::kBool;
      case ExprKind::kVar: {
        auto t = Lookup(e, frame, e.binding);
        if (!t) return std::nullopt;
        return e.type = *t;
      }
      case ExprKind::kIndex:
      case ExprKind::kLen: {
        auto t = Lookup(e, frame, e.binding);
        bool ok = t.has_value();
        if (t && *t != Type::kArray) {
          Error(e.loc, fmt::format("{} is not an array", e.name));
          ok = false;
        }
        if (e.kind == ExprKind::kIndex) {
          ok = Operand(*e.operands[0], Type::kInt, frame) && ok;
        }
        if (!ok) return std::nullopt;
        return e.type = Type::kInt;
      }
      case ExprKind::kUnary: {
        Type t = e.op == Op::kNeg ? Type::kInt : Type::kBool;
        if (!Operand(*e.operands[0], t, frame)) return std::nullopt;
        return e.type = t;
      }
      case ExprKind::kBinary:
        return CheckBinary(e, frame);
      case ExprKind::kForall:
      case ExprKind::kExists: {
        bool ok = Operand(*e.operands[0], Type::kInt, frame);
        ok = Operand(*e.operands[1], Type::kInt, frame) && ok;
        int slot = static_cast<int>(frame.size());
        e.binding = {Binding::Scope::kFrame, slot};
        frame.push_back({e.name, Type::kInt, slot});
        ok = Operand(*e.operands[2], Type::kBool, frame) && ok;
        frame.pop_back();
        if (!ok) return std::nullopt;
        return e.type = Type::kBool;
      }
      case ExprKind::kPredCall:
        return CheckCall(e, frame);
      case ExprKind::kInclude: {
        auto index = globals_->FindLocation(e.name);
        if (!index) {
          Error(e.loc, fmt::format("unknown location {} in assertion "
                                   "inclusion",
                                   e.name));
          return std::nullopt;
        }
        e.target = *index;
        return e.type = Type::kBool;
      }
    }
    return std::nullopt;
  }

  std::optional<Type> CheckBinary(Expr& e, std::vector<FrameVar>& frame) {
    const Expr& lhs = *e.operands[0];
    const Expr& rhs = *e.operands[1];
    switch (e.op) {
      case Op::kAnd:
      case Op::kOr: {
        bool ok = Operand(lhs, Type::kBool, frame);
        ok = Operand(rhs, Type::kBool, frame) && ok;
        if (!ok) return std::nullopt;
        return e.type = Type::kBool;
      }
      case Op::kEq:
      case Op::kNe: {
        auto lt = Check(lhs, frame);
        auto rt = Check(rhs, frame);
        if (!lt || !rt) return std::nullopt;
        if (*lt != *rt || *lt == Type::kArray) {
          Error(e.loc, fmt::format("type error: cannot compare {} with {} in "
                                   "'{}'",
                                   TypeName(*lt), TypeName(*rt), e.text));
          return std::nullopt;
        }
        return e.type = Type::kBool;
      }
      case Op::kLt:
      case Op::kLe:
      case Op::kGt:
      case Op::kGe: {
        bool ok = Operand(lhs, Type::kInt, frame);
        ok = Operand(rhs, Type::kInt, frame) && ok;
        if (!ok) return std::nullopt;
        return e.type = Type::kBool;
      }
      default: {
        bool ok = Operand(lhs, Type::kInt, frame);
        ok = Operand(rhs, Type::kInt, frame) && ok;
        if (!ok) return std::nullopt;
        return e.type = Type::kInt;
      }
    }
  }

  std::optional<Type> CheckCall(Expr& e, std::vector<FrameVar>& frame) {
    int index = -1;
    const Predicate* pred = FindPredicate(*globals_, e.name, &index);
    if (!pred || index >= visible_preds_) {
      Error(e.loc, fmt::format("unknown predicate {}", e.name));
      return std::nullopt;
    }
    e.target = index;
    if (pred->params.size() != e.operands.size()) {
      Error(e.loc, fmt::format("predicate {} expects {} arguments, got {}",
                               e.name, pred->params.size(),
                               e.operands.size()));
      return std::nullopt;
    }
    bool ok = true;
    for (size_t i = 0; i < e.operands.size(); ++i) {
      const Expr& arg = *e.operands[i];
      if (pred->params[i].kind == VarKind::kIntArray) {
        if (arg.kind != ExprKind::kVar) {
          Error(arg.loc, fmt::format("argument {} of {} must name an array",
                                     i + 1, e.name));
          ok = false;
          continue;
        }
        ok = Operand(arg, Type::kArray, frame) && ok;
      } else {
        ok = Operand(arg, Type::kInt, frame) && ok;
      }
    }
    if (!ok) return std::nullopt;
    return e.type = Type::kBool;
  }

  const RawMatrix& raw_;
  std::vector<ParseError>& errors_;
  const CodeMatrix* globals_ = nullptr;
  int visible_preds_ = 0;
  bool in_predicate_ = false;
};

}  // namespace

ParseResult ParseMatrix(std::string_view text) {
  ParseResult result;
  std::vector<Token> tokens = internal::Lex(text, result.errors);
  if (!result.errors.empty()) return result;
  RawMatrix raw = Parser(std::move(tokens), result.errors).Parse();
  if (!result.errors.empty()) return result;
  result.matrix = Resolver(raw, result.errors).Run();
  if (!result.errors.empty()) result.matrix.reset();
  return result;
}

}  // namespace mcx
