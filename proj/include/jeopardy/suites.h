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
#include <string>
#include <vector>

#include "jeopardy/interp.h"

namespace jeopardy::harness {

struct TestConfig {
  std::uint64_t seed = 42;
  int cases = 100;
  // Suites whose name contains this text run; empty runs all.
  std::string filter;
  interp::Options options;
};

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  // Cases with no verdict to compare: a violation on the generating side,
  // or an input outside the function's image.
  int vacuous = 0;
  int undecided = 0;
  // When true, undecided cases count as failures.
  bool strictUndecided = true;
  std::vector<std::string> failures;

  bool ok() const { return failed == 0 && (!strictUndecided || undecided == 0); }
  std::string summaryLine() const;
};

// corpus/expectations.txt, one case per line.
SuiteResult runCorpusSuite(const TestConfig& config);
// evalDown then inferEnvDown on every function body of every accepted
// corpus program; the inferred environment must equal the generated one.
SuiteResult runTheorem1Suite(const TestConfig& config);
// inferEnvDown on generated results, then evalDown; undecided is reported
// but tolerated. Fuel is capped at 10000 per call.
SuiteResult runInferenceFirstSuite(const TestConfig& config);
// invert f (f v) = v and f (invert f w) = w on the invertibles corpus.
SuiteResult runCorollary1Suite(const TestConfig& config);
// parse -> print -> parse on every corpus file, printed core programs and
// generated values.
SuiteResult runRoundTripSuite(const TestConfig& config);
// Round trips on the mutation fixture with the first-match fast path broken;
// passes when at least one counterexample is found.
SuiteResult runMutationSuite(const TestConfig& config);

// The suites selected by config.filter, in a fixed order.
std::vector<SuiteResult> runAllSuites(const TestConfig& config);

}  // namespace jeopardy::harness
