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
#include <vector>

namespace jeopardy {

// 1-based line/column range; a zero line means "no location".
struct SourceSpan {
  int line = 0;
  int column = 0;
  int endLine = 0;
  int endColumn = 0;

  bool known() const { return line > 0; }
  static SourceSpan cover(const SourceSpan& first, const SourceSpan& last);
};

std::string toString(const SourceSpan& span);

enum class Severity { Error, Warning, Note };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourceSpan span;
};

// "file:3:5: error[T002]: message"
std::string formatDiagnostic(const Diagnostic& diagnostic, std::string_view file);

bool hasErrors(const std::vector<Diagnostic>& diagnostics);

}  // namespace jeopardy
