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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "jeopardy/corpus.h"
#include "jeopardy/generator.h"
#include "jeopardy/interp.h"
#include "jeopardy/parser.h"
#include "jeopardy/pipeline.h"
#include "jeopardy/printer.h"
#include "jeopardy/suites.h"
#include "jeopardy/typecheck.h"

namespace {

using namespace jeopardy;

struct Verdict {
  bool passed = false;
  std::string detail;
};

struct Command {
  int exit = -1;
  std::string out;
};

std::string quote(const std::string& arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

Command runCli(const std::vector<std::string>& args) {
  std::string line = quote(JEOPARDY_CLI);
  for (const std::string& a : args) line += " " + quote(a);
  line += " 2>/dev/null";
  Command result;
  FILE* pipe = popen(line.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  int status = pclose(pipe);
  result.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string corpusPath(const std::string& name) {
  return std::string(JEOPARDY_CORPUS_DIR) + "/" + name;
}

Program load(std::string_view name) {
  auto compiled = frontend::compile(*harness::corpusSource(name));
  if (!compiled.ok()) throw std::runtime_error(std::string(name) + " does not compile");
  return std::move(*compiled.program);
}

Verdict addFixture() {
  Program program = load("arithmetic.jeo");
  FunctionRef add{"add", 0, {}};
  harness::ValueGenerator gen(program, 42);
  for (int i = 0; i < 50; ++i) {
    Value n = gen.value("nat");
    Outcome out = interp::apply(program, add, Pattern::constructor("pair", {Pattern::constructor("zero"), n}));
    if (!out.ok() || out.value != n) {
      return {false, "add ([zero], " + frontend::printValue(n) + ") gave " + describe(out)};
    }
  }
  for (int i = 0; i < 50; ++i) {
    Value k = gen.value("nat", 5);
    Value n = gen.value("nat");
    Value input = Pattern::constructor("pair", {Pattern::constructor("suc", {k}), n});
    Outcome out = interp::apply(program, add, input);
    if (!out.isViolation(ViolationKind::PsiViolation)) {
      return {false, "add " + frontend::printValue(input) + " gave " + describe(out)};
    }
  }
  return {true, "50 zero-headed inputs return n, 50 suc-headed inputs raise PsiViolation"};
}

Verdict fibPair() {
  auto compiled = frontend::compile(*harness::corpusSource("fibonacci.jeo"));
  if (!compiled.program) return {false, "fibonacci.jeo does not parse"};
  Outcome out = interp::apply(*compiled.program, FunctionRef{"fib-pair", 0, {}},
                              frontend::parseValue("[zero]"));
  Value expected = frontend::parseValue("([suc [zero]], [suc [zero]])");
  return {out.ok() && out.value == expected, "fib-pair [zero] = " + describe(out)};
}

Verdict theorem1() {
  harness::TestConfig config;
  harness::SuiteResult r = harness::runTheorem1Suite(config);
  bool passed = r.failed == 0 && r.undecided == 0 && r.passed > 0;
  std::string detail = r.summaryLine();
  if (!r.failures.empty()) detail += "; " + r.failures.front();
  return {passed, detail};
}

Verdict corollary1() {
  Program program = load("invertibles.jeo");
  interp::Options options;
  int checked = 0;
  for (const char* name : {"inc", "not", "swp", "mapsuc", "mirror"}) {
    const Function* f = program.findFunction(name);
    if (f == nullptr) return {false, std::string("missing function ") + name};
    harness::ValueGenerator gen(program, 42);
    FunctionRef forward{name, 0, {}}, backward{name, 1, {}};
    for (int i = 0; i < 100; ++i) {
      Value v = gen.value(f->argType);
      Outcome w = interp::apply(program, forward, v, options);
      if (w.ok()) {
        Outcome back = interp::apply(program, backward, w.value, options);
        if (!back.ok() || back.value != v) {
          return {false, std::string(name) + ": invert f (f " + frontend::printValue(v) +
                             ") = " + describe(back)};
        }
        ++checked;
      }
      Value target = gen.value(f->resultType);
      Outcome pre = interp::apply(program, backward, target, options);
      if (pre.isUndecided()) return {false, std::string(name) + ": inverse undecided"};
      if (pre.ok()) {
        Outcome again = interp::apply(program, forward, pre.value, options);
        if (!again.ok() || again.value != target) {
          return {false, std::string(name) + ": f (invert f " + frontend::printValue(target) +
                             ") = " + describe(again)};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " round trips over 5 functions x 100 inputs"};
}

bool rejectedForLinearity(const typecheck::TypeReport& report, const char* function) {
  const typecheck::FunctionVerdict* v = report.find(function);
  if (v == nullptr || v->accepted) return false;
  return std::any_of(v->diagnostics.begin(), v->diagnostics.end(), [](const Diagnostic& d) {
    return d.code == "T002" || d.code == "T003";
  });
}

Verdict negativeTyping() {
  auto report = [](std::string_view name) { return typecheck::checkProgram(load(name)); };
  bool swap = rejectedForLinearity(report("swap.jeo"), "swap");
  bool fib = rejectedForLinearity(report("fibonacci.jeo"), "fib");
  bool arithmetic = report("arithmetic.jeo").accepted;
  bool lists = report("lists.jeo").accepted;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  return {swap && fib && arithmetic && lists,
          std::string("swap rejected: ") + yes(swap) + ", fib rejected: " + yes(fib) +
              ", arithmetic accepted: " + yes(arithmetic) + ", lists accepted: " + yes(lists)};
}

Verdict nonInjectivity() {
  bool passed = true;
  std::string detail;
  for (const char* fuel : {"1000", "10000", "100000"}) {
    Command c = runCli({"run", "--invert", "--fuel", fuel, corpusPath("arithmetic.jeo"),
                        "[suc [zero]]"});
    std::string out = c.out.substr(0, c.out.find('\n'));
    if (c.exit != 1 && c.exit != 4) passed = false;
    if (!detail.empty()) detail += "; ";
    detail += "fuel " + std::string(fuel) + ": exit " + std::to_string(c.exit);
    if (!out.empty()) detail += " -> " + out;
  }
  return {passed, detail};
}

// Elementwise successor over a cons list, written independently of the
// interpreter.
Value successorOfEach(const Value& list) {
  if (list.name == "nil") return list;
  return Pattern::constructor(
      "cons", {Pattern::constructor("suc", {list.args[0]}), successorOfEach(list.args[1])});
}

Verdict unsafeForward() {
  const std::string input = "[zero] : [suc [zero]] : []";
  Command c = runCli({"run", "--skip-psi", corpusPath("lists.jeo"), input});
  Value expected = successorOfEach(frontend::parseValue(input));
  if (c.exit != 0) return {false, "exit " + std::to_string(c.exit)};
  try {
    Value got = frontend::parseValue(c.out);
    return {got == expected, "got " + frontend::printValue(got) + ", oracle " +
                                 frontend::printValue(expected)};
  } catch (const std::exception& e) {
    return {false, std::string("unparseable output: ") + e.what()};
  }
}

Verdict determinism() {
  Command first = runCli({"test", "--seed", "42"});
  Command second = runCli({"test", "--seed", "42"});
  if (first.out.empty() || first.out != second.out || first.exit != second.exit) {
    return {false, "two test --seed 42 runs differ"};
  }
  int files = 0;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(JEOPARDY_CORPUS_DIR)) {
    if (entry.path().extension() != ".jeo") continue;
    Command a = runCli({"ast", entry.path().string()});
    Command b = runCli({"ast", entry.path().string()});
    if (a.out != b.out || a.exit != b.exit) {
      return {false, "ast differs between runs on " + entry.path().filename().string()};
    }
    ++files;
  }
  return {true, "test summaries identical; ast identical on " + std::to_string(files) + " files"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    Verdict (*check)();
  };
  const Criterion criteria[] = {
      {"C1", "add fixture", addFixture},
      {"C2", "fib-pair [zero]", fibPair},
      {"C3", "environment inference inverts evaluation", theorem1},
      {"C4", "invertible corpus round trips", corollary1},
      {"C5", "negative typing", negativeTyping},
      {"C6", "non-injectivity witness", nonInjectivity},
      {"C7", "unsafe forward map-f", unsafeForward},
      {"C8", "determinism", determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.passed) ++failed;
    std::cout << (v.passed ? "PASS " : "FAIL ") << c.id << " " << c.name << ": " << v.detail
              << std::endl;
  }
  std::cout << (std::size(criteria) - failed) << "/" << std::size(criteria)
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
