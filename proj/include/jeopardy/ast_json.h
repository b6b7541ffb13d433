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

#include <string>

#include <nlohmann/json.hpp>

#include "jeopardy/ast.h"

namespace jeopardy::frontend {

inline constexpr int kAstSchemaVersion = 1;

// Tree encoding of a desugared program; the layout is described in
// docs/ast-schema.md. Objects are key-sorted, so dumps are byte-stable.
nlohmann::json programToJson(const Program& program);
nlohmann::json termToJson(const Term& term);
nlohmann::json patternToJson(const Pattern& pattern);

// Two-space indented dump with a trailing newline.
std::string emitAst(const Program& program);

}  // namespace jeopardy::frontend
