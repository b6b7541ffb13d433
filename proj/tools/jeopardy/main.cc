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

// jeopardy: check, run, print the AST of, and test programs.
//
// Exit codes: 0 ok, 1 runtime violation, 2 type error, 3 parse or
// validation error (also bad usage and unreadable input), 4 undecided.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "jeopardy/ast_json.h"
#include "jeopardy/interp.h"
#include "jeopardy/parser.h"
#include "jeopardy/pipeline.h"
#include "jeopardy/printer.h"
#include "jeopardy/suites.h"
#include "jeopardy/typecheck.h"
#include "jeopardy/validate.h"

namespace {

using namespace jeopardy;

enum Exit : int {
  kOk = 0,
  kRuntime = 1,
  kTypeError = 2,
  kParseError = 3,
  kUndecided = 4,
};

std::optional<std::string> readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void report(const std::vector<Diagnostic>& diagnostics, const std::string& file) {
  for (const Diagnostic& d : diagnostics) std::cerr << formatDiagnostic(d, file) << "\n";
}

// Source -> checked program, or the exit code to stop with.
struct Loaded {
  std::optional<Program> program;
  int exit = kOk;
};

Loaded load(const std::string& path, bool typecheck) {
  auto source = readFile(path);
  if (!source) {
    std::cerr << path << ": error: cannot read file\n";
    return {std::nullopt, kParseError};
  }
  frontend::CompileResult compiled = frontend::compile(*source);
  report(compiled.diagnostics, path);
  if (!compiled.ok()) return {std::nullopt, kParseError};
  if (typecheck) {
    typecheck::TypeReport types = typecheck::checkProgram(*compiled.program);
    report(types.diagnostics(), path);
    if (!types.accepted) return {std::nullopt, kTypeError};
  }
  return {std::move(compiled.program), kOk};
}

int cmdCheck(const std::string& path) { return load(path, true).exit; }

struct RunFlags {
  std::string path;
  std::string value;
  bool invert = false;
  std::optional<std::uint64_t> fuel;
  bool skipPsi = false;
  bool trace = false;
};

int cmdRun(const RunFlags& flags) {
  Loaded loaded = load(flags.path, true);
  if (!loaded.program) return loaded.exit;
  const Program& program = *loaded.program;

  std::string text = flags.value;
  if (text == "-") text.assign(std::istreambuf_iterator<char>(std::cin), {});
  Value input;
  try {
    input = frontend::parseValue(text);
  } catch (const frontend::SyntaxError& e) {
    std::cerr << "<value>:" << toString(e.span) << ": error[P002]: " << e.what() << "\n";
    return kParseError;
  } catch (const frontend::LexError& e) {
    std::cerr << "<value>:" << toString(e.span) << ": error[P001]: " << e.what() << "\n";
    return kParseError;
  }

  const Function* main = program.findFunction(program.main().base);
  bool inverted = program.main().runsInverted() != flags.invert;
  const Name& expected = inverted ? main->resultType : main->argType;
  if (!frontend::valueHasType(program, input, expected)) {
    std::cerr << "<value>: error[V003]: input " << frontend::printValue(input)
              << " is not a value of type '" << expected << "'\n";
    return kParseError;
  }

  interp::Options options;
  options.fuel = flags.fuel.value_or(interp::defaultFuel());
  if (flags.skipPsi) {
    options.psiMode = interp::PsiMode::Skip;
    std::cerr << "WARNING: --skip-psi disables the first-match policy in forward evaluation.\n"
                 "WARNING: results are NOT guaranteed to be reversible.\n";
  }
  if (flags.trace) {
    options.trace = [](const interp::TraceEvent& e) {
      std::cerr << e.rule << "\t" << toString(e.span) << "\t" << e.value << "\n";
    };
  }

  Outcome out = interp::runMain(program, input, flags.invert, options);
  if (out.ok()) {
    std::cout << frontend::printValue(out.value) << "\n";
    if (flags.skipPsi) std::cerr << "note: result computed with --skip-psi (non-reversible)\n";
    return kOk;
  }
  if (out.isUndecided()) {
    std::cerr << "undecided: " << out.message << "\n";
    return kUndecided;
  }
  std::cerr << flags.path;
  if (out.span.known()) std::cerr << ":" << out.span.line << ":" << out.span.column;
  std::cerr << ": runtime error[" << toString(out.kind) << "]: " << out.message << "\n";
  return kRuntime;
}

int cmdAst(const std::string& path) {
  auto source = readFile(path);
  if (!source) {
    std::cerr << path << ": error: cannot read file\n";
    return kParseError;
  }
  frontend::CompileOptions options;
  options.validate = false;
  frontend::CompileResult compiled = frontend::compile(*source, options);
  report(compiled.diagnostics, path);
  if (!compiled.ok()) return kParseError;
  for (Diagnostic d : frontend::validate(*compiled.program)) {
    d.severity = Severity::Warning;
    std::cerr << formatDiagnostic(d, path) << "\n";
  }
  std::cout << frontend::emitAst(*compiled.program);
  return kOk;
}

struct TestFlags {
  std::string filter;
  std::uint64_t seed = 42;
  int cases = 100;
  std::optional<std::uint64_t> fuel;
  bool breakFastPath = false;
};

int cmdTest(const TestFlags& flags) {
  harness::TestConfig config;
  config.filter = flags.filter;
  config.seed = flags.seed;
  config.cases = flags.cases;
  config.options.fuel = flags.fuel.value_or(interp::defaultFuel());
  config.options.brokenFastPath = flags.breakFastPath;
  std::vector<harness::SuiteResult> results = harness::runAllSuites(config);
  int failing = 0;
  for (const harness::SuiteResult& r : results) {
    std::cout << r.summaryLine() << "\n";
    for (const std::string& f : r.failures) std::cout << "    " << f << "\n";
    if (!r.ok()) ++failing;
  }
  if (results.empty()) {
    std::cerr << "no suite matches filter '" << flags.filter << "'\n";
    return kRuntime;
  }
  std::cout << (failing == 0 ? "all suites passed" : std::to_string(failing) + " suite(s) failed")
            << " (seed " << flags.seed << ", " << flags.cases << " cases)\n";
  return failing == 0 ? kOk : kRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checker, interpreter and test runner for the Jeopardy language"};
  app.require_subcommand(1);

  std::string checkPath;
  auto* check = app.add_subcommand("check", "Parse, validate and typecheck a program");
  check->add_option("FILE", checkPath, "Program file")->required();

  RunFlags run;
  auto* runCmd = app.add_subcommand("run", "Apply main (or its inverse) to a value");
  runCmd->add_flag("--invert", run.invert, "Run invert main instead of main");
  runCmd->add_option("--fuel", run.fuel, "Proof-search budget (default JEOPARDY_FUEL or 100000)");
  runCmd->add_flag("--skip-psi", run.skipPsi, "Unsafe: skip first-match checks going forward");
  runCmd->add_flag("--trace", run.trace, "Log rule applications to standard error");
  runCmd->add_option("FILE", run.path, "Program file")->required();
  runCmd->add_option("VALUE", run.value, "Input value, or - to read standard input")->required();

  std::string astPath;
  auto* ast = app.add_subcommand("ast", "Print the desugared program as JSON");
  ast->add_option("FILE", astPath, "Program file")->required();

  TestFlags test;
  auto* testCmd = app.add_subcommand("test", "Run the corpus and property suites");
  testCmd->add_option("--filter", test.filter, "Only suites whose name contains NAME");
  testCmd->add_option("--seed", test.seed, "Generator seed");
  testCmd->add_option("--cases", test.cases, "Generated inputs per function")
      ->check(CLI::PositiveNumber);
  testCmd->add_option("--fuel", test.fuel, "Proof-search budget per call");
  testCmd->add_flag("--break-fast-path", test.breakFastPath,
                    "Mutation testing: make the first-match fast path unsound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  if (check->parsed()) return cmdCheck(checkPath);
  if (runCmd->parsed()) return cmdRun(run);
  if (ast->parsed()) return cmdAst(astPath);
  return cmdTest(test);
}
