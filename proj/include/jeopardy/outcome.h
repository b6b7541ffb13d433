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
#include <string_view>

#include "jeopardy/ast.h"
#include "jeopardy/source.h"

namespace jeopardy {

enum class ViolationKind {
  MatchFailure,
  PsiViolation,
  LinearityFault,
  UnboundVariable,
  UnknownFunction,
};

std::string_view toString(ViolationKind kind);

// Result of running a term: a value, a runtime violation, or "undecided" when
// the proof-search budget ran out before a derivation or refutation was found.
struct Outcome {
  enum class Status { Success, Violation, Undecided };

  Status status = Status::Undecided;
  Value value;
  ViolationKind kind = ViolationKind::MatchFailure;
  std::string message;
  SourceSpan span;

  static Outcome success(Value value);
  static Outcome violation(ViolationKind kind, std::string message, SourceSpan span = {});
  static Outcome undecided(std::string message);

  bool ok() const { return status == Status::Success; }
  bool isViolation() const { return status == Status::Violation; }
  bool isUndecided() const { return status == Status::Undecided; }
  bool isViolation(ViolationKind k) const { return isViolation() && kind == k; }
};

// "success [zero]", "PsiViolation: ...", "undecided: ..."
std::string describe(const Outcome& outcome);

}  // namespace jeopardy
