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

#include "jeopardy/ast.h"

#include <algorithm>
#include <array>
#include <cctype>

namespace jeopardy {

namespace {

constexpr std::array<std::string_view, 7> kReserved = {"data", "main", "case", "of",
                                                       "invert", "let", "in"};

void collectVars(const Pattern& pattern, std::vector<Name>& out) {
  if (pattern.isVariable()) {
    out.push_back(pattern.name);
    return;
  }
  for (const Pattern& arg : pattern.args) collectVars(arg, out);
}

void collectFree(const Term& term, std::vector<Name>& out) {
  switch (term.kind) {
    case Term::Kind::Pattern:
    case Term::Kind::Application:
      collectVars(term.pattern, out);
      return;
    case Term::Kind::Case:
      collectFree(*term.selector, out);
      for (const CaseBranch& branch : term.branches) {
        std::vector<Name> bound = patternVars(branch.pattern);
        std::vector<Name> body;
        collectFree(branch.body, body);
        for (Name& name : body) {
          if (std::find(bound.begin(), bound.end(), name) == bound.end()) {
            out.push_back(std::move(name));
          }
        }
      }
      return;
  }
}

}  // namespace

bool isReservedWord(std::string_view text) {
  return std::find(kReserved.begin(), kReserved.end(), text) != kReserved.end();
}

bool isValidName(std::string_view text) {
  if (text.empty() || !std::islower(static_cast<unsigned char>(text.front()))) return false;
  for (char c : text.substr(1)) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '-' && c != '\'' && c != '_') return false;
  }
  return !isReservedWord(text);
}

bool isFreshName(std::string_view text) {
  return text.size() > 1 && text.front() == '%' &&
         std::all_of(text.begin() + 1, text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Pattern Pattern::variable(Name name, SourceSpan span) {
  Pattern p;
  p.kind = Kind::Variable;
  p.name = std::move(name);
  p.span = span;
  return p;
}

Pattern Pattern::constructor(Name name, std::vector<Pattern> args, SourceSpan span) {
  Pattern p;
  p.kind = Kind::Constructor;
  p.name = std::move(name);
  p.args = std::move(args);
  p.span = span;
  return p;
}

bool Pattern::isGround() const {
  if (isVariable()) return false;
  return std::all_of(args.begin(), args.end(), [](const Pattern& a) { return a.isGround(); });
}

bool operator==(const Pattern& lhs, const Pattern& rhs) {
  return lhs.kind == rhs.kind && lhs.name == rhs.name && lhs.args == rhs.args;
}

std::optional<Value> asValue(const Pattern& pattern) {
  if (!pattern.isGround()) return std::nullopt;
  return pattern;
}

std::vector<Name> patternVars(const Pattern& pattern) {
  std::vector<Name> out;
  collectVars(pattern, out);
  return out;
}

bool operator==(const FunctionRef& lhs, const FunctionRef& rhs) {
  return lhs.base == rhs.base && lhs.inversions == rhs.inversions;
}

Term Term::fromPattern(Pattern pattern) {
  Term t;
  t.kind = Kind::Pattern;
  t.span = pattern.span;
  t.pattern = std::move(pattern);
  return t;
}

Term Term::application(FunctionRef function, Pattern argument, SourceSpan span) {
  Term t;
  t.kind = Kind::Application;
  t.function = std::move(function);
  t.pattern = std::move(argument);
  t.span = span;
  return t;
}

Term Term::caseOf(Term selector, Name annotation, std::vector<CaseBranch> branches,
                  SourceSpan span) {
  Term t;
  t.kind = Kind::Case;
  t.selector = std::make_shared<const Term>(std::move(selector));
  t.annotation = std::move(annotation);
  t.branches = std::move(branches);
  t.span = span;
  return t;
}

bool operator==(const Term& lhs, const Term& rhs) {
  if (lhs.kind != rhs.kind) return false;
  switch (lhs.kind) {
    case Term::Kind::Pattern:
      return lhs.pattern == rhs.pattern;
    case Term::Kind::Application:
      return lhs.function == rhs.function && lhs.pattern == rhs.pattern;
    case Term::Kind::Case:
      return *lhs.selector == *rhs.selector && lhs.annotation == rhs.annotation &&
             lhs.branches == rhs.branches;
  }
  return false;
}

bool operator==(const CaseBranch& lhs, const CaseBranch& rhs) {
  return lhs.pattern == rhs.pattern && lhs.body == rhs.body;
}

std::vector<Name> freeVars(const Term& term) {
  std::vector<Name> out;
  collectFree(term, out);
  return out;
}

bool operator==(const Constructor& lhs, const Constructor& rhs) {
  return lhs.name == rhs.name && lhs.argTypes == rhs.argTypes;
}

bool operator==(const DataType& lhs, const DataType& rhs) {
  return lhs.name == rhs.name && lhs.constructors == rhs.constructors;
}

bool operator==(const Function& lhs, const Function& rhs) {
  return lhs.name == rhs.name && lhs.param == rhs.param && lhs.argType == rhs.argType &&
         lhs.resultType == rhs.resultType && lhs.body == rhs.body;
}

bool operator==(const MainDecl& lhs, const MainDecl& rhs) { return lhs.ref == rhs.ref; }

Program::Program(std::vector<DataType> datatypes, std::vector<Function> functions,
                 std::vector<MainDecl> mains)
    : datatypes_(std::move(datatypes)),
      functions_(std::move(functions)),
      mains_(std::move(mains)) {
  for (std::size_t i = 0; i < datatypes_.size(); ++i) {
    typeIndex_.try_emplace(datatypes_[i].name, i);
    for (std::size_t j = 0; j < datatypes_[i].constructors.size(); ++j) {
      constructorIndex_.try_emplace(datatypes_[i].constructors[j].name, i, j);
    }
  }
  for (std::size_t i = 0; i < functions_.size(); ++i) {
    functionIndex_.try_emplace(functions_[i].name, i);
  }
}

const DataType* Program::findType(std::string_view name) const {
  auto it = typeIndex_.find(name);
  return it == typeIndex_.end() ? nullptr : &datatypes_[it->second];
}

const Function* Program::findFunction(std::string_view name) const {
  auto it = functionIndex_.find(name);
  return it == functionIndex_.end() ? nullptr : &functions_[it->second];
}

std::optional<Program::ConstructorInfo> Program::findConstructor(std::string_view name) const {
  auto it = constructorIndex_.find(name);
  if (it == constructorIndex_.end()) return std::nullopt;
  const DataType& type = datatypes_[it->second.first];
  return ConstructorInfo{&type, &type.constructors[it->second.second]};
}

bool operator==(const Program& lhs, const Program& rhs) {
  return lhs.datatypes_ == rhs.datatypes_ && lhs.functions_ == rhs.functions_ &&
         lhs.mains_ == rhs.mains_;
}

}  // namespace jeopardy
