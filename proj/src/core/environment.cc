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

#include "jeopardy/environment.h"

#include "jeopardy/unify.h"

namespace jeopardy {

LinearityFault::LinearityFault(Name variable)
    : std::runtime_error("variable '" + variable + "' is bound twice"),
      variable_(std::move(variable)) {}

std::string toString(const Environment& env) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : env) {
    if (!first) out += ", ";
    first = false;
    out += name + " ↦ " + toString(value);
  }
  return out + "}";
}

std::string toString(const TypingEnv& env) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, type] : env) {
    if (!first) out += ", ";
    first = false;
    out += name + " ↦ " + type;
  }
  return out + "}";
}

}  // namespace jeopardy
