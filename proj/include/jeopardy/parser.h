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

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jeopardy/lexer.h"
#include "jeopardy/surface.h"

namespace jeopardy::frontend {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::string message, SourceSpan span, std::set<std::string> expected = {})
      : std::runtime_error(std::move(message)), span(span), expected(std::move(expected)) {}
  SourceSpan span;
  std::set<std::string> expected;
};

// Declarations in source order. Throws SyntaxError.
//
// A ':' is an annotation rather than list cons when it is followed by a
// name and then 'of' (case), '=' (let, clause result type), or ')' where the
// name is a declared datatype (parameter annotation "(p : tau)").
std::vector<Declaration> parseProgram(const std::vector<Token>& tokens);
std::vector<Declaration> parseProgram(std::string_view source, LexOptions options = {});

// A ground value: "[c v...]", "(v, v)", "v : v", "[]". Throws SyntaxError or
// LexError; a variable anywhere yields SyntaxError "value must be ground".
Value parseValue(std::string_view text);

}  // namespace jeopardy::frontend
