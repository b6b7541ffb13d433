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

#include "jeopardy/ast_json.h"

namespace jeopardy::frontend {

namespace {

using nlohmann::json;

json spanToJson(const SourceSpan& span) {
  return json{{"line", span.line},
              {"column", span.column},
              {"endLine", span.endLine},
              {"endColumn", span.endColumn}};
}

json refToJson(const FunctionRef& ref) {
  return json{{"base", ref.base}, {"inversions", ref.inversions}};
}

}  // namespace

json patternToJson(const Pattern& pattern) {
  if (pattern.isVariable()) {
    return json{{"kind", "var"}, {"name", pattern.name}, {"span", spanToJson(pattern.span)}};
  }
  json args = json::array();
  for (const Pattern& a : pattern.args) args.push_back(patternToJson(a));
  return json{{"kind", "con"},
              {"name", pattern.name},
              {"args", std::move(args)},
              {"span", spanToJson(pattern.span)}};
}

json termToJson(const Term& term) {
  switch (term.kind) {
    case Term::Kind::Pattern:
      return json{{"kind", "pat"}, {"pattern", patternToJson(term.pattern)}};
    case Term::Kind::Application:
      return json{{"kind", "app"},
                  {"ref", refToJson(term.function)},
                  {"arg", patternToJson(term.pattern)},
                  {"span", spanToJson(term.span)}};
    case Term::Kind::Case: {
      json branches = json::array();
      for (const CaseBranch& b : term.branches) {
        branches.push_back(json{{"pattern", patternToJson(b.pattern)}, {"body", termToJson(b.body)}});
      }
      return json{{"kind", "case"},
                  {"selector", termToJson(*term.selector)},
                  {"type", term.annotation},
                  {"branches", std::move(branches)},
                  {"span", spanToJson(term.span)}};
    }
  }
  return json();
}

json programToJson(const Program& program) {
  json data = json::array();
  for (const DataType& d : program.datatypes()) {
    json constructors = json::array();
    for (const Constructor& c : d.constructors) {
      constructors.push_back(json{{"name", c.name}, {"args", c.argTypes}});
    }
    data.push_back(json{{"kind", "data"},
                        {"name", d.name},
                        {"constructors", std::move(constructors)},
                        {"span", spanToJson(d.span)}});
  }
  json functions = json::array();
  for (const Function& f : program.functions()) {
    functions.push_back(json{{"kind", "fun"},
                             {"name", f.name},
                             {"param", patternToJson(f.param)},
                             {"argType", f.argType},
                             {"resultType", f.resultType},
                             {"body", termToJson(f.body)},
                             {"span", spanToJson(f.span)}});
  }
  json mains = json::array();
  for (const MainDecl& m : program.mains()) {
    mains.push_back(json{{"kind", "main"}, {"ref", refToJson(m.ref)}, {"span", spanToJson(m.span)}});
  }
  return json{{"schemaVersion", kAstSchemaVersion},
              {"datatypes", std::move(data)},
              {"functions", std::move(functions)},
              {"mains", std::move(mains)}};
}

std::string emitAst(const Program& program) { return programToJson(program).dump(2) + "\n"; }

}  // namespace jeopardy::frontend
