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

#include "jeopardy/outcome.h"

#include "jeopardy/unify.h"

namespace jeopardy {

std::string_view toString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MatchFailure: return "MatchFailure";
    case ViolationKind::PsiViolation: return "PsiViolation";
    case ViolationKind::LinearityFault: return "LinearityFault";
    case ViolationKind::UnboundVariable: return "UnboundVariable";
    case ViolationKind::UnknownFunction: return "UnknownFunction";
  }
  return "?";
}

Outcome Outcome::success(Value value) {
  Outcome o;
  o.status = Status::Success;
  o.value = std::move(value);
  return o;
}

Outcome Outcome::violation(ViolationKind kind, std::string message, SourceSpan span) {
  Outcome o;
  o.status = Status::Violation;
  o.kind = kind;
  o.message = std::move(message);
  o.span = span;
  return o;
}

Outcome Outcome::undecided(std::string message) {
  Outcome o;
  o.status = Status::Undecided;
  o.message = std::move(message);
  return o;
}

std::string describe(const Outcome& outcome) {
  switch (outcome.status) {
    case Outcome::Status::Success: return "success " + toString(outcome.value);
    case Outcome::Status::Violation:
      return std::string(toString(outcome.kind)) + ": " + outcome.message;
    case Outcome::Status::Undecided: return "undecided: " + outcome.message;
  }
  return "?";
}

}  // namespace jeopardy
