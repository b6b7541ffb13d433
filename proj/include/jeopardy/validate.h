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

#include <vector>

#include "jeopardy/ast.h"
#include "jeopardy/source.h"

namespace jeopardy::frontend {

// Well-formedness of a desugared program. Reports every problem found:
//   V001 unknown constructor     V002 constructor arity mismatch
//   V003 unknown datatype        V004 unknown function
//   V005 duplicate declaration   V006 not exactly one main
// An empty result means the program is well formed.
std::vector<Diagnostic> validate(const Program& program);

// Every constructor occurrence in the value is declared with matching arity
// and the value inhabits `type`.
bool valueHasType(const Program& program, const Value& value, const Name& type);

}  // namespace jeopardy::frontend
