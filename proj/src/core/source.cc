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

#include "jeopardy/source.h"

#include <algorithm>

namespace jeopardy {

SourceSpan SourceSpan::cover(const SourceSpan& first, const SourceSpan& last) {
  if (!first.known()) return last;
  if (!last.known()) return first;
  return {first.line, first.column, last.endLine, last.endColumn};
}

std::string toString(const SourceSpan& span) {
  if (!span.known()) return "?";
  return std::to_string(span.line) + ":" + std::to_string(span.column) + "-" +
         std::to_string(span.endLine) + ":" + std::to_string(span.endColumn);
}

std::string formatDiagnostic(const Diagnostic& diagnostic, std::string_view file) {
  std::string out(file);
  if (diagnostic.span.known()) {
    out += ":" + std::to_string(diagnostic.span.line) + ":" +
           std::to_string(diagnostic.span.column);
  }
  switch (diagnostic.severity) {
    case Severity::Error: out += ": error"; break;
    case Severity::Warning: out += ": warning"; break;
    case Severity::Note: out += ": note"; break;
  }
  if (!diagnostic.code.empty()) out += "[" + diagnostic.code + "]";
  out += ": " + diagnostic.message;
  return out;
}

bool hasErrors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

}  // namespace jeopardy
