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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jeopardy/interp.h"

namespace jeopardy::harness {

// A corpus source compiled into the binary. Names are paths relative to the
// corpus directory ("lists.jeo", "negative/two_mains.jeo").
struct CorpusFile {
  std::string_view name;
  std::string_view contents;
};

std::span<const CorpusFile> corpusFiles();
std::optional<std::string_view> corpusSource(std::string_view name);

enum class Direction { Forward, Inverse, Check, ForwardUnchecked };

// One line of corpus/expectations.txt:
//   file[@function] | value | direction | psi | expect | provenance
// direction is forward, inverse, check or forward-unchecked; psi is enforce,
// skip or "-"; expect is a value, a violation kind, "undecided", "ok" or a
// diagnostic code; provenance is PAPER, TRIVIAL or DERIVED.
struct Expectation {
  std::string file;
  std::optional<std::string> function;
  std::string value;
  Direction direction = Direction::Forward;
  interp::PsiMode psiMode = interp::PsiMode::Enforce;
  std::string expect;
  std::string provenance;
  int line = 0;

  std::string label() const;
};

// Throws std::runtime_error naming the offending line.
std::vector<Expectation> parseExpectations(std::string_view text);

struct ExpectationResult {
  bool passed = false;
  std::string actual;
};

ExpectationResult runExpectation(const Expectation& expectation, const interp::Options& options);

}  // namespace jeopardy::harness
