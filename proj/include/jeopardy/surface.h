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
#include <variant>
#include <vector>

#include "jeopardy/ast.h"

namespace jeopardy::frontend {

struct SurfaceBranch;

// Core term forms plus the sugar that desugaring erases: constructor terms
// with arbitrary arguments, tuples, cons/nil lists, application to a term,
// and let.
struct SurfaceTerm {
  enum class Kind { Variable, Constructor, Tuple, Cons, Nil, Application, Case, Let };

  Kind kind = Kind::Variable;
  Name name;                  // Variable, Constructor
  FunctionRef function;       // Application
  // Constructor arguments; tuple/cons components; application argument;
  // case selector; let bound term followed by let body.
  std::vector<SurfaceTerm> items;
  Pattern pattern;            // Let
  std::optional<Name> annotation;  // Case (always set), Let (optional)
  std::vector<SurfaceBranch> branches;  // Case
  SourceSpan span;
};

struct SurfaceBranch {
  Pattern pattern;
  SurfaceTerm body;
};

bool operator==(const SurfaceTerm& lhs, const SurfaceTerm& rhs);
bool operator==(const SurfaceBranch& lhs, const SurfaceBranch& rhs);

// One equation "f p [: tau] = t." of a function group.
struct SurfaceClause {
  Name name;
  Pattern param;
  std::optional<Name> argType;
  std::optional<Name> resultType;
  SurfaceTerm body;
  SourceSpan span;
};

bool operator==(const SurfaceClause& lhs, const SurfaceClause& rhs);

using Declaration = std::variant<DataType, SurfaceClause, MainDecl>;

// Surface terms built only from variables, constructors, tuples and lists
// are patterns; this returns the pattern with tuple/list sugar resolved to
// pair/cons/nil.
std::optional<Pattern> asPattern(const SurfaceTerm& term);

}  // namespace jeopardy::frontend
