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

#include "jeopardy/validate.h"

#include <set>

namespace jeopardy::frontend {

namespace {

class Validator {
 public:
  explicit Validator(const Program& program) : program_(program) {}

  std::vector<Diagnostic> run() {
    declarations();
    for (const Function& f : program_.functions()) {
      requireType(f.argType, f.span);
      requireType(f.resultType, f.span);
      pattern(f.param);
      term(f.body);
    }
    if (program_.mains().size() != 1) {
      SourceSpan span = program_.mains().size() > 1 ? program_.mains()[1].span : SourceSpan{};
      report("V006",
             "a program needs exactly one main declaration, found " +
                 std::to_string(program_.mains().size()),
             span);
    }
    for (const MainDecl& m : program_.mains()) requireFunction(m.ref);
    return std::move(out_);
  }

 private:
  void report(std::string code, std::string message, SourceSpan span) {
    out_.push_back({Severity::Error, std::move(code), std::move(message), span});
  }

  void declarations() {
    std::set<Name> types, constructors, functions;
    for (const DataType& d : program_.datatypes()) {
      if (!types.insert(d.name).second) {
        report("V005", "datatype '" + d.name + "' is declared more than once", d.span);
      }
      for (const Constructor& c : d.constructors) {
        if (!constructors.insert(c.name).second) {
          report("V005", "constructor '" + c.name + "' is declared more than once", c.span);
        }
        for (const Name& arg : c.argTypes) requireType(arg, c.span);
      }
    }
    for (const Function& f : program_.functions()) {
      if (!functions.insert(f.name).second) {
        report("V005", "function '" + f.name + "' is declared more than once", f.span);
      }
    }
  }

  void requireType(const Name& name, SourceSpan span) {
    if (program_.findType(name) == nullptr) {
      report("V003", "unknown datatype '" + name + "'", span);
    }
  }

  void requireFunction(const FunctionRef& ref) {
    if (program_.findFunction(ref.base) == nullptr) {
      report("V004", "unknown function '" + ref.base + "'", ref.span);
    }
  }

  void pattern(const Pattern& p) {
    if (p.isVariable()) return;
    auto info = program_.findConstructor(p.name);
    if (!info) {
      report("V001", "unknown constructor '" + p.name + "'", p.span);
    } else if (info->constructor->argTypes.size() != p.args.size()) {
      report("V002",
             "constructor '" + p.name + "' expects " +
                 std::to_string(info->constructor->argTypes.size()) + " argument(s), got " +
                 std::to_string(p.args.size()),
             p.span);
    }
    for (const Pattern& a : p.args) pattern(a);
  }

  void term(const Term& t) {
    switch (t.kind) {
      case Term::Kind::Pattern:
        pattern(t.pattern);
        return;
      case Term::Kind::Application:
        requireFunction(t.function);
        pattern(t.pattern);
        return;
      case Term::Kind::Case:
        term(*t.selector);
        requireType(t.annotation, t.span);
        for (const CaseBranch& b : t.branches) {
          pattern(b.pattern);
          term(b.body);
        }
        return;
    }
  }

  const Program& program_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate(const Program& program) { return Validator(program).run(); }

bool valueHasType(const Program& program, const Value& value, const Name& type) {
  if (!value.isConstructor()) return false;
  auto info = program.findConstructor(value.name);
  if (!info || info->type->name != type ||
      info->constructor->argTypes.size() != value.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < value.args.size(); ++i) {
    if (!valueHasType(program, value.args[i], info->constructor->argTypes[i])) return false;
  }
  return true;
}

}  // namespace jeopardy::frontend
