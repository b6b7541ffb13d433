// Copyright 2026 The Jeopardy Authors
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

#include "jeopardy/parser.h"

#include <utility>

namespace jeopardy::frontend {

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    for (std::size_t i = 0; i + 1 < toks_.size(); ++i) {
      if (toks_[i].kind == TokenKind::KwData && toks_[i + 1].kind == TokenKind::Name) {
        typeNames_.insert(toks_[i + 1].text);
      }
    }
  }

  std::vector<Declaration> program() {
    std::vector<Declaration> out;
    while (!at(TokenKind::End)) out.push_back(declaration());
    return out;
  }

  Value valueOnly() {
    Pattern p = pattern();
    expect(TokenKind::End);
    if (!p.isGround()) throw SyntaxError("value must be ground", firstVariableSpan(p));
    return p;
  }

 private:
  // ---- token helpers ----

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at(TokenKind kind, std::size_t ahead = 0) const { return peek(ahead).kind == kind; }

  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    std::string message = "unexpected " + (t.kind == TokenKind::End
                                                ? std::string("end of input")
                                                : "'" + t.text + "'");
    if (!expected.empty()) {
      message += ", expected ";
      bool first = true;
      for (const auto& e : expected) {
        if (!first) message += " or ";
        first = false;
        message += e;
      }
    }
    throw SyntaxError(message, t.span, std::move(expected));
  }

  const Token& expect(TokenKind kind) {
    if (!at(kind)) fail({std::string(describe(kind))});
    return take();
  }

  SourceSpan spanSince(const SourceSpan& start) const {
    const Token& last = toks_[pos_ > 0 ? pos_ - 1 : 0];
    return SourceSpan::cover(start, last.span);
  }

  static SourceSpan firstVariableSpan(const Pattern& p) {
    if (p.isVariable()) return p.span;
    for (const Pattern& a : p.args) {
      if (!a.isGround()) return firstVariableSpan(a);
    }
    return p.span;
  }

  // ':' NAME followed by a token that makes it an annotation.
  bool annotationAhead() const {
    if (!at(TokenKind::Colon) || !at(TokenKind::Name, 1)) return false;
    TokenKind after = peek(2).kind;
    if (after == TokenKind::KwOf || after == TokenKind::Equals) return true;
    return after == TokenKind::RParen && typeNames_.count(peek(1).text) > 0;
  }

  bool atVariableName() const { return at(TokenKind::Name) || at(TokenKind::Fresh); }

  // ---- declarations ----

  Declaration declaration() {
    switch (peek().kind) {
      case TokenKind::KwData: return dataDecl();
      case TokenKind::KwMain: {
        SourceSpan start = take().span;
        FunctionRef ref = functionRef();
        expect(TokenKind::Dot);
        return MainDecl{std::move(ref), spanSince(start)};
      }
      case TokenKind::Name: return clause();
      default: fail({"'data'", "'main'", "function name"});
    }
  }

  Declaration dataDecl() {
    SourceSpan start = take().span;
    DataType type;
    type.name = expect(TokenKind::Name).text;
    expect(TokenKind::Equals);
    do {
      SourceSpan cstart = expect(TokenKind::LBracket).span;
      Constructor ctor;
      ctor.name = expect(TokenKind::Name).text;
      while (at(TokenKind::Name)) ctor.argTypes.push_back(take().text);
      expect(TokenKind::RBracket);
      ctor.span = spanSince(cstart);
      type.constructors.push_back(std::move(ctor));
    } while (at(TokenKind::LBracket));
    expect(TokenKind::Dot);
    type.span = spanSince(start);
    return type;
  }

  Declaration clause() {
    SurfaceClause c;
    const Token& nameTok = take();
    c.name = nameTok.text;
    if (at(TokenKind::LParen)) {
      SourceSpan start = take().span;
      Pattern p = pattern();
      if (at(TokenKind::Comma)) {
        take();
        Pattern second = pattern();
        p = Pattern::constructor("pair", {std::move(p), std::move(second)}, spanSince(start));
      }
      if (annotationAhead()) {
        take();
        c.argType = take().text;
      }
      expect(TokenKind::RParen);
      if (p.isConstructor() && (p.name == "pair" || p.name == "cons")) p.span = spanSince(start);
      c.param = std::move(p);
    } else {
      c.param = atomicPattern();
    }
    if (at(TokenKind::Colon)) {
      take();
      c.resultType = expect(TokenKind::Name).text;
    }
    expect(TokenKind::Equals);
    c.body = term();
    expect(TokenKind::Dot);
    c.span = spanSince(nameTok.span);
    return c;
  }

  FunctionRef functionRef() {
    if (at(TokenKind::Name)) {
      const Token& t = take();
      return FunctionRef{t.text, 0, t.span};
    }
    if (at(TokenKind::LParen) && at(TokenKind::KwInvert, 1)) {
      SourceSpan start = take().span;
      take();
      FunctionRef inner = functionRef();
      expect(TokenKind::RParen);
      inner.inversions += 1;
      inner.span = spanSince(start);
      return inner;
    }
    fail({"function name", "'(invert'"});
  }

  // ---- patterns ----

  Pattern pattern() {
    Pattern head = atomicPattern();
    if (at(TokenKind::Colon) && !annotationAhead()) {
      take();
      Pattern tail = pattern();
      SourceSpan span = SourceSpan::cover(head.span, tail.span);
      return Pattern::constructor("cons", {std::move(head), std::move(tail)}, span);
    }
    return head;
  }

  Pattern atomicPattern() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Name:
      case TokenKind::Fresh:
        take();
        return Pattern::variable(t.text, t.span);
      case TokenKind::Nil:
        take();
        return Pattern::constructor("nil", {}, t.span);
      case TokenKind::LBracket: {
        SourceSpan start = take().span;
        if (at(TokenKind::RBracket)) {
          take();
          return Pattern::constructor("nil", {}, spanSince(start));
        }
        Name name = expect(TokenKind::Name).text;
        std::vector<Pattern> args;
        while (!at(TokenKind::RBracket)) {
          if (at(TokenKind::End)) fail({"']'"});
          args.push_back(atomicPattern());
        }
        take();
        return Pattern::constructor(std::move(name), std::move(args), spanSince(start));
      }
      case TokenKind::LParen: {
        SourceSpan start = take().span;
        Pattern p = pattern();
        if (at(TokenKind::Comma)) {
          take();
          Pattern second = pattern();
          expect(TokenKind::RParen);
          return Pattern::constructor("pair", {std::move(p), std::move(second)},
                                      spanSince(start));
        }
        expect(TokenKind::RParen);
        return p;
      }
      default:
        fail({"pattern"});
    }
  }

  // ---- terms ----

  SurfaceTerm term() {
    if (at(TokenKind::KwCase)) return caseTerm();
    if (at(TokenKind::KwLet)) return letTerm();
    return consTerm();
  }

  SurfaceTerm caseTerm() {
    SourceSpan start = take().span;
    SurfaceTerm t;
    t.kind = SurfaceTerm::Kind::Case;
    t.items.push_back(term());
    expect(TokenKind::Colon);
    t.annotation = expect(TokenKind::Name).text;
    expect(TokenKind::KwOf);
    do {
      if (!t.branches.empty()) take();
      SurfaceBranch b;
      b.pattern = pattern();
      expect(TokenKind::Arrow);
      b.body = term();
      t.branches.push_back(std::move(b));
    } while (at(TokenKind::Semicolon));
    t.span = spanSince(start);
    return t;
  }

  SurfaceTerm letTerm() {
    SourceSpan start = take().span;
    SurfaceTerm t;
    t.kind = SurfaceTerm::Kind::Let;
    t.pattern = pattern();
    if (at(TokenKind::Colon)) {
      take();
      t.annotation = expect(TokenKind::Name).text;
    }
    expect(TokenKind::Equals);
    t.items.push_back(term());
    expect(TokenKind::KwIn);
    t.items.push_back(term());
    t.span = spanSince(start);
    return t;
  }

  SurfaceTerm consTerm() {
    SurfaceTerm head = applicationTerm();
    if (at(TokenKind::Colon) && !annotationAhead()) {
      take();
      SurfaceTerm tail = consTerm();
      SurfaceTerm t;
      t.kind = SurfaceTerm::Kind::Cons;
      t.span = SourceSpan::cover(head.span, tail.span);
      t.items.push_back(std::move(head));
      t.items.push_back(std::move(tail));
      return t;
    }
    return head;
  }

  bool atAtomStart(std::size_t ahead = 0) const {
    switch (peek(ahead).kind) {
      case TokenKind::Name:
      case TokenKind::Fresh:
      case TokenKind::LBracket:
      case TokenKind::Nil:
      case TokenKind::LParen:
        return true;
      default:
        return false;
    }
  }

  SurfaceTerm applicationTerm() {
    bool named = at(TokenKind::Name) && atAtomStart(1);
    bool inverted = at(TokenKind::LParen) && at(TokenKind::KwInvert, 1);
    if (!named && !inverted) return atomicTerm();
    SourceSpan start = peek().span;
    SurfaceTerm t;
    t.kind = SurfaceTerm::Kind::Application;
    t.function = functionRef();
    t.items.push_back(atomicTerm());
    t.span = spanSince(start);
    return t;
  }

  SurfaceTerm atomicTerm() {
    const Token& tok = peek();
    SurfaceTerm t;
    switch (tok.kind) {
      case TokenKind::Name:
      case TokenKind::Fresh:
        take();
        t.kind = SurfaceTerm::Kind::Variable;
        t.name = tok.text;
        t.span = tok.span;
        return t;
      case TokenKind::Nil:
        take();
        t.kind = SurfaceTerm::Kind::Nil;
        t.span = tok.span;
        return t;
      case TokenKind::LBracket: {
        SourceSpan start = take().span;
        if (at(TokenKind::RBracket)) {
          take();
          t.kind = SurfaceTerm::Kind::Nil;
          t.span = spanSince(start);
          return t;
        }
        t.kind = SurfaceTerm::Kind::Constructor;
        t.name = expect(TokenKind::Name).text;
        while (!at(TokenKind::RBracket)) {
          if (at(TokenKind::End)) fail({"']'"});
          t.items.push_back(atomicTerm());
        }
        take();
        t.span = spanSince(start);
        return t;
      }
      case TokenKind::LParen: {
        if (at(TokenKind::KwInvert, 1)) return applicationTerm();
        SourceSpan start = take().span;
        SurfaceTerm inner = term();
        if (at(TokenKind::Comma)) {
          take();
          t.kind = SurfaceTerm::Kind::Tuple;
          t.items.push_back(std::move(inner));
          t.items.push_back(term());
          expect(TokenKind::RParen);
          t.span = spanSince(start);
          return t;
        }
        expect(TokenKind::RParen);
        return inner;
      }
      default:
        fail({"term"});
    }
  }

  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  std::set<std::string> typeNames_;
};

}  // namespace

std::vector<Declaration> parseProgram(const std::vector<Token>& tokens) {
  return Parser(tokens).program();
}

std::vector<Declaration> parseProgram(std::string_view source, LexOptions options) {
  return parseProgram(lex(source, options));
}

Value parseValue(std::string_view text) {
  std::vector<Token> tokens = lex(text);
  return Parser(tokens).valueOnly();
}

}  // namespace jeopardy::frontend
