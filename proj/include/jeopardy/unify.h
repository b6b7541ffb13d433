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

#include "jeopardy/ast.h"
#include "jeopardy/environment.h"

namespace jeopardy {

// Most general unifier of a value against a pattern. The value is ground, so
// this is matching: on success the environment binds exactly vars(p) and
// substituting it into p gives back v. Repeated variables must match equal
// subvalues. std::nullopt means "no match", not an error.
std::optional<Environment> unify(const Value& value, const Pattern& pattern);

// Replaces every variable of p by its binding. Returns std::nullopt when some
// variable is unbound.
std::optional<Value> substitute(const Pattern& pattern, const Environment& env);

// Raw constructor syntax for diagnostics: "[suc [zero]]", "x".
std::string toString(const Pattern& pattern);

}  // namespace jeopardy
