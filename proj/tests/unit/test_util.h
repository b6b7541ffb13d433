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

#include <gtest/gtest.h>

#include <string_view>

#include "jeopardy/corpus.h"
#include "jeopardy/parser.h"
#include "jeopardy/pipeline.h"

namespace jeopardy::testing {

inline Program compileOk(std::string_view source) {
  frontend::CompileResult r = frontend::compile(source);
  for (const Diagnostic& d : r.diagnostics) ADD_FAILURE() << formatDiagnostic(d, "<test>");
  if (!r.program) throw std::runtime_error("program did not parse");
  return std::move(*r.program);
}

inline Program corpusProgram(std::string_view name) {
  auto source = harness::corpusSource(name);
  if (!source) throw std::runtime_error("no corpus file " + std::string(name));
  return compileOk(*source);
}

inline Value val(std::string_view text) { return frontend::parseValue(text); }

inline Pattern var(const char* name) { return Pattern::variable(name); }

inline Pattern con(const char* name, std::vector<Pattern> args = {}) {
  return Pattern::constructor(name, std::move(args));
}

inline constexpr std::string_view kNatPair =
    "data nat = [zero] [suc nat].\n"
    "data pair = [pair nat nat].\n";

}  // namespace jeopardy::testing
