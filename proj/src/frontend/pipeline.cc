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

#include "jeopardy/pipeline.h"

#include "jeopardy/desugar.h"
#include "jeopardy/parser.h"
#include "jeopardy/validate.h"

namespace jeopardy::frontend {

CompileResult compile(std::string_view source, CompileOptions options) {
  CompileResult result;
  try {
    result.surface = parseProgram(lex(source, options.lex));
  } catch (const LexError& e) {
    result.diagnostics.push_back({Severity::Error, "P001", e.what(), e.span});
    return result;
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back({Severity::Error, "P002", e.what(), e.span});
    return result;
  }
  DesugarResult lowered = desugar(*result.surface);
  result.diagnostics = std::move(lowered.diagnostics);
  if (options.validate && !hasErrors(result.diagnostics)) {
    for (Diagnostic& d : validate(lowered.program)) result.diagnostics.push_back(std::move(d));
  }
  result.program = std::move(lowered.program);
  return result;
}

}  // namespace jeopardy::frontend
