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

#include "jeopardy/corpus.h"

#include <sstream>
#include <stdexcept>

#include "jeopardy/parser.h"
#include "jeopardy/pipeline.h"
#include "jeopardy/printer.h"
#include "jeopardy/typecheck.h"

namespace jeopardy::harness {

namespace {

std::string trim(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  std::size_t end = text.find_last_not_of(" \t\r");
  return std::string(text.substr(begin, end - begin + 1));
}

std::vector<std::string> splitColumns(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = line.find('|', start);
    out.push_back(trim(line.substr(start, bar == std::string_view::npos ? bar : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

Direction parseDirection(const std::string& text, int line) {
  if (text == "forward") return Direction::Forward;
  if (text == "inverse") return Direction::Inverse;
  if (text == "check") return Direction::Check;
  if (text == "forward-unchecked") return Direction::ForwardUnchecked;
  throw std::runtime_error("expectations line " + std::to_string(line) +
                           ": unknown direction '" + text + "'");
}

std::string codesOf(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const Diagnostic& d : diagnostics) {
    if (!out.empty()) out += ",";
    out += d.code;
  }
  return out.empty() ? "ok" : out;
}

std::string render(const Outcome& outcome) {
  if (outcome.ok()) return frontend::printValue(outcome.value);
  if (outcome.isUndecided()) return "undecided";
  return std::string(toString(outcome.kind));
}

}  // namespace

std::optional<std::string_view> corpusSource(std::string_view name) {
  for (const CorpusFile& f : corpusFiles()) {
    if (f.name == name) return f.contents;
  }
  return std::nullopt;
}

std::string Expectation::label() const {
  std::string out = file;
  if (function) out += "@" + *function;
  static constexpr const char* kDirections[] = {"forward", "inverse", "check",
                                                "forward-unchecked"};
  out += " " + std::string(kDirections[static_cast<int>(direction)]);
  if (direction != Direction::Check) out += " " + value;
  return out;
}

std::vector<Expectation> parseExpectations(std::string_view text) {
  std::vector<Expectation> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> cols = splitColumns(line);
    if (cols.size() != 6) {
      throw std::runtime_error("expectations line " + std::to_string(number) +
                               ": expected 6 columns, found " + std::to_string(cols.size()));
    }
    Expectation e;
    e.line = number;
    std::size_t at = cols[0].find('@');
    e.file = cols[0].substr(0, at);
    if (at != std::string::npos) e.function = cols[0].substr(at + 1);
    e.value = cols[1];
    e.direction = parseDirection(cols[2], number);
    if (cols[3] == "skip") {
      e.psiMode = interp::PsiMode::Skip;
    } else if (cols[3] == "enforce" || cols[3] == "-") {
      e.psiMode = interp::PsiMode::Enforce;
    } else {
      throw std::runtime_error("expectations line " + std::to_string(number) +
                               ": unknown psi mode '" + cols[3] + "'");
    }
    e.expect = cols[4];
    e.provenance = cols[5];
    if (e.provenance != "PAPER" && e.provenance != "TRIVIAL" && e.provenance != "DERIVED") {
      throw std::runtime_error("expectations line " + std::to_string(number) +
                               ": provenance must be PAPER, TRIVIAL or DERIVED");
    }
    out.push_back(std::move(e));
  }
  return out;
}

ExpectationResult runExpectation(const Expectation& e, const interp::Options& options) {
  auto source = corpusSource(e.file);
  if (!source) return {false, "no corpus file '" + e.file + "'"};
  frontend::CompileResult compiled = frontend::compile(*source);
  if (e.direction == Direction::Check) {
    std::string codes = codesOf(compiled.diagnostics);
    if (compiled.ok()) codes = codesOf(typecheck::checkProgram(*compiled.program).diagnostics());
    bool passed = e.expect == "ok" ? codes == "ok"
                                   : ("," + codes + ",").find("," + e.expect + ",") !=
                                         std::string::npos;
    return {passed, codes};
  }
  if (!compiled.ok()) return {false, "does not compile: " + codesOf(compiled.diagnostics)};
  if (e.direction != Direction::ForwardUnchecked) {
    auto report = typecheck::checkProgram(*compiled.program);
    if (!report.accepted) return {false, "does not typecheck: " + codesOf(report.diagnostics())};
  }
  Value input;
  try {
    input = frontend::parseValue(e.value);
  } catch (const std::exception& ex) {
    return {false, std::string("bad input value: ") + ex.what()};
  }
  FunctionRef ref = e.function ? FunctionRef{*e.function, 0, {}} : compiled.program->main();
  if (e.direction == Direction::Inverse) ++ref.inversions;
  interp::Options run = options;
  run.psiMode = e.psiMode;
  Outcome outcome = interp::apply(*compiled.program, ref, input, run);
  std::string actual = render(outcome);
  if (outcome.ok()) {
    try {
      return {frontend::parseValue(e.expect) == outcome.value, actual};
    } catch (const std::exception&) {
      return {false, actual};
    }
  }
  return {actual == e.expect, actual + (outcome.message.empty() ? "" : " (" + outcome.message + ")")};
}

}  // namespace jeopardy::harness
