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
#include <vector>

#include "jeopardy/ast.h"
#include "jeopardy/surface.h"

namespace jeopardy::frontend {

// Values print with tuple/list sugar for pair/cons/nil: "([zero], [])".
std::string printValue(const Value& value);

// Patterns print in raw constructor syntax: "[pair a [suc b]]".
std::string printPattern(const Pattern& pattern);

// Core terms print without re-sugaring, except ground patterns (values).
// Fresh names print verbatim, so re-parsing needs LexOptions::allowFreshNames.
std::string printTerm(const Term& term);
std::string printProgram(const Program& program);

// Surface declarations, preserving sugar; parse(print(d)) == d.
std::string printSurface(const std::vector<Declaration>& declarations);
std::string printSurfaceTerm(const SurfaceTerm& term);

}  // namespace jeopardy::frontend
