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

#include <optional>
#include <string_view>
#include <vector>

#include "jeopardy/ast.h"
#include "jeopardy/lexer.h"
#include "jeopardy/source.h"
#include "jeopardy/surface.h"

namespace jeopardy::frontend {

struct CompileOptions {
  LexOptions lex;
  // When false, validation is skipped (used by `ast` on fragments).
  bool validate = true;
};

struct CompileResult {
  // Empty when lexing or parsing failed.
  std::optional<std::vector<Declaration>> surface;
  // Present whenever parsing succeeded, even if later stages reported errors.
  std::optional<Program> program;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return program.has_value() && !hasErrors(diagnostics); }
};

// lex -> parse -> desugar -> validate. Lexical errors are P001, syntax errors
// P002, the rest carry the desugar/validate codes.
CompileResult compile(std::string_view source, CompileOptions options = {});

}  // namespace jeopardy::frontend
