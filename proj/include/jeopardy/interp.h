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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "jeopardy/ast.h"
#include "jeopardy/environment.h"
#include "jeopardy/outcome.h"

namespace jeopardy::interp {

inline constexpr std::uint64_t kDefaultFuel = 100000;

// kDefaultFuel, or JEOPARDY_FUEL when it holds a non-negative integer.
std::uint64_t defaultFuel();

enum class PsiMode {
  Enforce,
  // Unsafe: skips the first-match policy in forward case evaluation only.
  Skip,
};

// Which value the "earlier bodies must not produce it" clause is tested
// against. Result is the default; Selector is kept for experiments.
enum class PsiTarget { Result, Selector };

struct TraceEvent {
  std::string rule;
  SourceSpan span;
  std::string value;
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct Options {
  // Rule applications allowed inside first-match checks and environment
  // inference, shared by the whole call. Exhaustion gives "undecided".
  std::uint64_t fuel = kDefaultFuel;
  // Optional cap on every rule application, including plain evaluation.
  std::optional<std::uint64_t> stepLimit;
  // Nesting depth after which the call gives up as undecided.
  std::size_t depthLimit = 100000;
  PsiMode psiMode = PsiMode::Enforce;
  PsiTarget psiTarget = PsiTarget::Result;
  // Refute an earlier branch whose body is constructor-headed with a head
  // different from the value's, without searching.
  bool fastPath = true;
  // Mutation-testing fixture: the fast path refutes every constructor-headed
  // body, even when the heads agree.
  bool brokenFastPath = false;
  TraceSink trace;
};

// Outcome of environment inference.
struct Inference {
  enum class Status { Success, Failure, Violation, Undecided };
  Status status = Status::Failure;
  Environment environment;
  ViolationKind kind = ViolationKind::MatchFailure;
  std::string message;

  bool ok() const { return status == Status::Success; }
};

std::string describe(const Inference& inference);

// Conventional evaluation of t under gamma.
Outcome evalDown(const Program& program, const Environment& gamma, const Term& term,
                 const Options& options = {});

// Inverse interpretation of the application "g p": the result is the value
// (invert g) p computes.
Outcome evalUp(const Program& program, const Environment& gamma, const FunctionRef& ref,
               const Pattern& argument, const Options& options = {});

// The unique environment under which t evaluates to v.
Inference inferEnvDown(const Program& program, const Term& term, const Value& value,
                       const Options& options = {});

// The unique environment under which (invert g) p evaluates to v.
Inference inferEnvUp(const Program& program, const FunctionRef& ref, const Pattern& argument,
                     const Value& value, const Options& options = {});

// g applied to a value in the empty environment.
Outcome apply(const Program& program, const FunctionRef& ref, const Value& input,
              const Options& options = {});

// main, or invert main, applied to the input.
Outcome runMain(const Program& program, const Value& input, bool inverted,
                const Options& options = {});

}  // namespace jeopardy::interp
