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

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jeopardy/ast.h"
#include "jeopardy/environment.h"
#include "jeopardy/source.h"

namespace jeopardy::typecheck {

// A typing failure with a stable code:
//   T001 unbound variable         T002 variable used more than once
//   T003 unused variable          T004 branch result types differ
//   T005 type does not match a signature or annotation
class TypeError : public std::runtime_error {
 public:
  TypeError(std::string code, std::string message, SourceSpan span)
      : std::runtime_error(std::move(message)), code(std::move(code)), span(span) {}
  std::string code;
  SourceSpan span;
};

// Sigma with  p : tau  ~>  Sigma. Throws TypeError (T005) when a constructor
// does not belong to tau or has the wrong arity, LinearityFault when a
// variable repeats.
TypingEnv bindTypes(const Program& program, const Pattern& pattern, const Name& type);

// The type of t under sigma, consuming sigma exactly. Reuse surfaces as
// LinearityFault; every other failure as TypeError.
Name checkTerm(const Program& program, const TypingEnv& sigma, const Term& term);

// Inverse typing of an application whose reference runs inverted: the
// argument is checked at the function's result type and the result is its
// parameter type. Also checks that the body's inferred environment types
// the parameter pattern.
Name checkInverse(const Program& program, const TypingEnv& sigma, const FunctionRef& ref,
                  const Pattern& argument);

// The Sigma under which t has type tau, read from the term's shape.
TypingEnv unbindTypes(const Program& program, const Term& term, const Name& type);

struct FunctionVerdict {
  Name name;
  bool accepted = false;
  std::vector<Diagnostic> diagnostics;
};

struct TypeReport {
  std::vector<FunctionVerdict> functions;
  bool accepted = false;

  std::vector<Diagnostic> diagnostics() const;
  const FunctionVerdict* find(const Name& name) const;
};

// Checks every function; the program is accepted iff all functions are.
TypeReport checkProgram(const Program& program);

}  // namespace jeopardy::typecheck
