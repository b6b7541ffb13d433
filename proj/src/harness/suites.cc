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

#include "jeopardy/suites.h"

#include <algorithm>
#include <cstdio>

#include "jeopardy/corpus.h"
#include "jeopardy/generator.h"
#include "jeopardy/parser.h"
#include "jeopardy/pipeline.h"
#include "jeopardy/printer.h"
#include "jeopardy/typecheck.h"

namespace jeopardy::harness {

namespace {

constexpr std::size_t kMaxReportedFailures = 10;

// Inference from arbitrary results may diverge (map-f has no terminating
// inverse search), so this informational suite runs on a smaller budget.
constexpr std::uint64_t kInferenceFirstFuel = 10000;

struct Loaded {
  std::string name;
  Program program;
};

bool isTopLevel(std::string_view name) {
  return name.ends_with(".jeo") && name.find('/') == std::string_view::npos;
}

// Top-level corpus programs that compile and typecheck.
const std::vector<Loaded>& acceptedPrograms() {
  static const std::vector<Loaded> programs = [] {
    std::vector<Loaded> out;
    for (const CorpusFile& f : corpusFiles()) {
      if (!isTopLevel(f.name)) continue;
      auto compiled = frontend::compile(f.contents);
      if (!compiled.ok() || !typecheck::checkProgram(*compiled.program).accepted) continue;
      out.push_back({std::string(f.name), std::move(*compiled.program)});
    }
    return out;
  }();
  return programs;
}

const Loaded* findProgram(std::string_view name) {
  for (const Loaded& l : acceptedPrograms()) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

// Per-function seed, so adding a function does not shift the others.
std::uint64_t seedFor(std::uint64_t seed, std::string_view file, std::string_view function) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : file) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  h = (h ^ '@') * 1099511628211ULL;
  for (char c : function) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return h ^ seed;
}

void fail(SuiteResult& result, std::string message) {
  ++result.failed;
  if (result.failures.size() < kMaxReportedFailures) result.failures.push_back(std::move(message));
}

std::string show(const Outcome& outcome) {
  return outcome.ok() ? frontend::printValue(outcome.value) : describe(outcome);
}

std::string show(const interp::Inference& inference) { return interp::describe(inference); }

void corollary(SuiteResult& result, const TestConfig& config, const Loaded& loaded,
               const Function& f) {
  const Program& program = loaded.program;
  ValueGenerator gen(program, seedFor(config.seed, loaded.name, f.name));
  FunctionRef forward{f.name, 0, {}};
  FunctionRef backward{f.name, 1, {}};
  std::string where = loaded.name + "@" + f.name;
  for (int k = 0; k < config.cases; ++k) {
    Value v = gen.value(f.argType);
    Outcome w = interp::apply(program, forward, v, config.options);
    if (w.isUndecided()) {
      ++result.undecided;
    } else if (!w.ok()) {
      ++result.vacuous;
    } else {
      Outcome back = interp::apply(program, backward, w.value, config.options);
      if (back.ok() && back.value == v) {
        ++result.passed;
      } else if (back.isUndecided()) {
        ++result.undecided;
      } else {
        fail(result, where + ": invert f (f v) != v for v = " + frontend::printValue(v) +
                         "; f v = " + show(w) + "; invert f (f v) = " + show(back));
      }
    }

    Value target = gen.value(f.resultType);
    Outcome pre = interp::apply(program, backward, target, config.options);
    if (pre.isUndecided()) {
      ++result.undecided;
    } else if (!pre.ok()) {
      ++result.vacuous;
    } else {
      Outcome again = interp::apply(program, forward, pre.value, config.options);
      if (again.ok() && again.value == target) {
        ++result.passed;
      } else if (again.isUndecided()) {
        ++result.undecided;
      } else {
        fail(result, where + ": f (invert f w) != w for w = " + frontend::printValue(target) +
                         "; invert f w = " + show(pre) + "; f (invert f w) = " + show(again));
      }
    }
  }
}

SuiteResult corollaryOver(const char* name, const TestConfig& config,
                          const std::vector<std::string>& files) {
  SuiteResult result;
  result.name = name;
  for (const std::string& file : files) {
    const Loaded* loaded = findProgram(file);
    if (loaded == nullptr) {
      fail(result, file + ": not an accepted corpus program");
      continue;
    }
    for (const Function& f : loaded->program.functions()) corollary(result, config, *loaded, f);
  }
  return result;
}

}  // namespace

std::string SuiteResult::summaryLine() const {
  char buffer[160];
  std::snprintf(buffer, sizeof buffer, "%-16s %-4s passed=%d failed=%d vacuous=%d undecided=%d",
                name.c_str(), ok() ? "PASS" : "FAIL", passed, failed, vacuous, undecided);
  return buffer;
}

SuiteResult runCorpusSuite(const TestConfig& config) {
  SuiteResult result;
  result.name = "corpus";
  auto text = corpusSource("expectations.txt");
  if (!text) {
    fail(result, "expectations.txt is missing from the corpus");
    return result;
  }
  std::vector<Expectation> expectations;
  try {
    expectations = parseExpectations(*text);
  } catch (const std::exception& e) {
    fail(result, e.what());
    return result;
  }
  for (const Expectation& e : expectations) {
    ExpectationResult r = runExpectation(e, config.options);
    if (r.passed) {
      ++result.passed;
    } else {
      fail(result, "line " + std::to_string(e.line) + ": " + e.label() + ": expected " +
                       e.expect + ", got " + r.actual);
    }
  }
  return result;
}

SuiteResult runTheorem1Suite(const TestConfig& config) {
  SuiteResult result;
  result.name = "theorem1";
  for (const Loaded& loaded : acceptedPrograms()) {
    const Program& program = loaded.program;
    for (const Function& f : program.functions()) {
      ValueGenerator gen(program, seedFor(config.seed, loaded.name, f.name));
      TypingEnv sigma = typecheck::bindTypes(program, f.param, f.argType);
      for (int k = 0; k < config.cases; ++k) {
        Environment gamma = gen.environment(sigma);
        Outcome out = interp::evalDown(program, gamma, f.body, config.options);
        if (out.isUndecided()) {
          ++result.undecided;
          fail(result, loaded.name + "@" + f.name + ": evaluation undecided under " +
                           toString(gamma));
          continue;
        }
        if (!out.ok()) {
          ++result.vacuous;
          continue;
        }
        interp::Inference back = interp::inferEnvDown(program, f.body, out.value, config.options);
        if (back.ok() && back.environment == gamma) {
          ++result.passed;
        } else {
          if (back.status == interp::Inference::Status::Undecided) ++result.undecided;
          fail(result, loaded.name + "@" + f.name + ": body evaluates to " +
                           frontend::printValue(out.value) + " under " + toString(gamma) +
                           ", inference gives " + show(back));
        }
      }
    }
  }
  return result;
}

SuiteResult runInferenceFirstSuite(const TestConfig& config) {
  SuiteResult result;
  result.name = "inference-first";
  result.strictUndecided = false;
  interp::Options options = config.options;
  options.fuel = std::min(options.fuel, kInferenceFirstFuel);
  for (const Loaded& loaded : acceptedPrograms()) {
    const Program& program = loaded.program;
    for (const Function& f : program.functions()) {
      ValueGenerator gen(program, seedFor(config.seed + 1, loaded.name, f.name));
      for (int k = 0; k < config.cases; ++k) {
        Value v = gen.value(f.resultType);
        interp::Inference inferred = interp::inferEnvDown(program, f.body, v, options);
        if (inferred.status == interp::Inference::Status::Undecided) {
          ++result.undecided;
          continue;
        }
        if (!inferred.ok()) {
          ++result.vacuous;
          continue;
        }
        Outcome out = interp::evalDown(program, inferred.environment, f.body, options);
        if (out.ok() && out.value == v) {
          ++result.passed;
        } else if (out.isUndecided()) {
          ++result.undecided;
        } else {
          fail(result, loaded.name + "@" + f.name + ": inference from " +
                           frontend::printValue(v) + " gives " + show(inferred) +
                           ", evaluation gives " + show(out));
        }
      }
    }
  }
  return result;
}

SuiteResult runCorollary1Suite(const TestConfig& config) {
  return corollaryOver("corollary1", config, {"invertibles.jeo", "mutation_fixture.jeo"});
}

SuiteResult runMutationSuite(const TestConfig& config) {
  TestConfig broken = config;
  broken.options.brokenFastPath = true;
  SuiteResult inner = corollaryOver("mutation", broken, {"mutation_fixture.jeo"});
  SuiteResult result;
  result.name = "mutation";
  if (inner.failed > 0) {
    result.passed = 1;
  } else {
    fail(result, "breaking the first-match fast path went unnoticed by the round-trip suite");
  }
  return result;
}

SuiteResult runRoundTripSuite(const TestConfig& config) {
  SuiteResult result;
  result.name = "roundtrip";
  for (const CorpusFile& f : corpusFiles()) {
    if (!f.name.ends_with(".jeo")) continue;
    std::string name(f.name);
    frontend::CompileResult compiled = frontend::compile(f.contents);
    if (!compiled.surface) continue;
    try {
      std::string printed = frontend::printSurface(*compiled.surface);
      if (frontend::parseProgram(printed) == *compiled.surface) {
        ++result.passed;
      } else {
        fail(result, name + ": surface round trip changed the program:\n" + printed);
      }
    } catch (const std::exception& e) {
      fail(result, name + ": printed surface does not re-parse: " + e.what());
    }
    if (!compiled.ok()) continue;
    std::string core = frontend::printProgram(*compiled.program);
    frontend::CompileOptions quoting;
    quoting.lex.allowFreshNames = true;
    frontend::CompileResult again = frontend::compile(core, quoting);
    if (again.ok() && *again.program == *compiled.program) {
      ++result.passed;
    } else {
      fail(result, name + ": printed core program does not re-parse to itself:\n" + core);
    }
  }
  for (const Loaded& loaded : acceptedPrograms()) {
    ValueGenerator gen(loaded.program, seedFor(config.seed, loaded.name, "values"));
    for (const DataType& d : loaded.program.datatypes()) {
      for (int k = 0; k < config.cases; ++k) {
        Value v = gen.value(d.name);
        std::string printed = frontend::printValue(v);
        try {
          if (frontend::parseValue(printed) == v) {
            ++result.passed;
          } else {
            fail(result, loaded.name + ": value " + printed + " re-parses differently");
          }
        } catch (const std::exception& e) {
          fail(result, loaded.name + ": value " + printed + " does not re-parse: " + e.what());
        }
      }
    }
  }
  return result;
}

std::vector<SuiteResult> runAllSuites(const TestConfig& config) {
  using Runner = SuiteResult (*)(const TestConfig&);
  static const std::pair<const char*, Runner> kSuites[] = {
      {"corpus", runCorpusSuite},
      {"theorem1", runTheorem1Suite},
      {"inference-first", runInferenceFirstSuite},
      {"corollary1", runCorollary1Suite},
      {"roundtrip", runRoundTripSuite},
      {"mutation", runMutationSuite},
  };
  std::vector<SuiteResult> out;
  for (const auto& [name, run] : kSuites) {
    if (!config.filter.empty() && std::string_view(name).find(config.filter) == std::string_view::npos) {
      continue;
    }
    out.push_back(run(config));
  }
  return out;
}

}  // namespace jeopardy::harness
