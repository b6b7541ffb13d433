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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jeopardy/source.h"

namespace jeopardy::frontend {

enum class TokenKind {
  Name,
  Fresh,  // %N, only in quoting mode
  KwData,
  KwMain,
  KwCase,
  KwOf,
  KwInvert,
  KwLet,
  KwIn,
  LBracket,
  RBracket,
  Nil,  // "[]"
  LParen,
  RParen,
  Equals,
  Dot,
  Colon,
  Comma,
  Semicolon,
  Arrow,
  End,
};

std::string_view describe(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
};

struct LexOptions {
  // Accept the desugarer's fresh names (%0, %1, ...) so printed core
  // programs re-parse.
  bool allowFreshNames = false;
};

class LexError : public std::runtime_error {
 public:
  LexError(std::string message, SourceSpan span)
      : std::runtime_error(std::move(message)), span(span) {}
  SourceSpan span;
};

// Tokenizes source text; "--" starts a comment that runs to end of line. The
// returned list always ends with an End token. Throws LexError.
std::vector<Token> lex(std::string_view source, LexOptions options = {});

}  // namespace jeopardy::frontend
