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
#include "jeopardy/surface.h"

namespace jeopardy::frontend {

struct DesugarResult {
  Program program;
  std::vector<Diagnostic> diagnostics;
};

// Elaborates surface declarations into a core program:
//  - [c t...] with non-pattern arguments nests cases, left to right, binding
//    each such argument to a fresh variable annotated with the constructor's
//    declared argument type;
//  - (t1, t2) is [pair t1 t2], t1 : t2 is [cons t1 t2], [] is [nil];
//  - g t with t not a pattern is "case t : tau of x -> g x", tau being the
//    parameter type of g (its result type when g runs inverted);
//  - let p : tau = t in t' is "case t : tau of p -> t'";
//  - consecutive clauses of one function become a single function over a
//    fresh parameter that cases on the clause patterns in textual order.
// Fresh variables are %0, %1, ... numbered per function.
DesugarResult desugar(const std::vector<Declaration>& declarations);

}  // namespace jeopardy::frontend
