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

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jeopardy/source.h"

namespace jeopardy {

// Variables, constructors, datatypes and functions share one lexical class.
using Name = std::string;

bool isReservedWord(std::string_view text);
// First character a lowercase letter, then letters, digits, '-', '\'' or '_';
// not a reserved word.
bool isValidName(std::string_view text);
// Names produced by the desugarer ("%0", "%1", ...). They cannot be lexed in
// ordinary source, so they never capture user variables.
bool isFreshName(std::string_view text);

// p ::= [c p...] | x
struct Pattern {
  enum class Kind { Variable, Constructor };

  Kind kind = Kind::Constructor;
  Name name;
  std::vector<Pattern> args;
  SourceSpan span;

  static Pattern variable(Name name, SourceSpan span = {});
  static Pattern constructor(Name name, std::vector<Pattern> args = {},
                             SourceSpan span = {});

  bool isVariable() const { return kind == Kind::Variable; }
  bool isConstructor() const { return kind == Kind::Constructor; }
  // True when the pattern contains no variables, i.e. it is a value.
  bool isGround() const;
};

// Structural equality; source spans are ignored.
bool operator==(const Pattern& lhs, const Pattern& rhs);

// A value is a pattern without variables. The representation is shared with
// Pattern; asValue() is the checked narrowing.
using Value = Pattern;

std::optional<Value> asValue(const Pattern& pattern);

// Every variable occurrence, left to right, with multiplicity.
std::vector<Name> patternVars(const Pattern& pattern);

// g ::= f | (invert g). Nesting depth is kept as a count so printing
// preserves the source shape; parity is resolved at lookup.
struct FunctionRef {
  Name base;
  unsigned inversions = 0;
  SourceSpan span;

  bool runsInverted() const { return inversions % 2 == 1; }
};

bool operator==(const FunctionRef& lhs, const FunctionRef& rhs);

struct CaseBranch;

// t ::= p | g p | case t : tau of p_i -> t_i
struct Term {
  enum class Kind { Pattern, Application, Case };

  Kind kind = Kind::Pattern;
  // The pattern itself for Kind::Pattern, the argument for Kind::Application.
  Pattern pattern;
  FunctionRef function;
  std::shared_ptr<const Term> selector;
  Name annotation;
  std::vector<CaseBranch> branches;
  SourceSpan span;

  static Term fromPattern(Pattern pattern);
  static Term application(FunctionRef function, Pattern argument, SourceSpan span = {});
  static Term caseOf(Term selector, Name annotation, std::vector<CaseBranch> branches,
                     SourceSpan span = {});

  bool isPattern() const { return kind == Kind::Pattern; }
  bool isApplication() const { return kind == Kind::Application; }
  bool isCase() const { return kind == Kind::Case; }
};

struct CaseBranch {
  Pattern pattern;
  Term body;
};

bool operator==(const Term& lhs, const Term& rhs);
bool operator==(const CaseBranch& lhs, const CaseBranch& rhs);

// Free variables of a core term, with multiplicity (pattern-bound names of a
// case branch are removed from that branch's body).
std::vector<Name> freeVars(const Term& term);

struct Constructor {
  Name name;
  std::vector<Name> argTypes;
  SourceSpan span;
};

struct DataType {
  Name name;
  std::vector<Constructor> constructors;
  SourceSpan span;
};

struct Function {
  Name name;
  Pattern param;
  Name argType;
  Name resultType;
  Term body;
  SourceSpan span;
};

struct MainDecl {
  FunctionRef ref;
  SourceSpan span;
};

bool operator==(const Constructor& lhs, const Constructor& rhs);
bool operator==(const DataType& lhs, const DataType& rhs);
bool operator==(const Function& lhs, const Function& rhs);
bool operator==(const MainDecl& lhs, const MainDecl& rhs);

// The declaration list Delta. Immutable once built; lookups go through name
// indices built at construction (first declaration wins on duplicates, which
// validation reports).
class Program {
 public:
  struct ConstructorInfo {
    const DataType* type;
    const Constructor* constructor;
  };

  Program() = default;
  Program(std::vector<DataType> datatypes, std::vector<Function> functions,
          std::vector<MainDecl> mains);

  const std::vector<DataType>& datatypes() const { return datatypes_; }
  const std::vector<Function>& functions() const { return functions_; }
  const std::vector<MainDecl>& mains() const { return mains_; }

  const DataType* findType(std::string_view name) const;
  const Function* findFunction(std::string_view name) const;
  std::optional<ConstructorInfo> findConstructor(std::string_view name) const;

  // Precondition: exactly one main declaration (checked by validation).
  const FunctionRef& main() const { return mains_.front().ref; }

  friend bool operator==(const Program& lhs, const Program& rhs);

 private:
  std::vector<DataType> datatypes_;
  std::vector<Function> functions_;
  std::vector<MainDecl> mains_;
  std::map<Name, std::size_t, std::less<>> typeIndex_;
  std::map<Name, std::size_t, std::less<>> functionIndex_;
  std::map<Name, std::pair<std::size_t, std::size_t>, std::less<>> constructorIndex_;
};

}  // namespace jeopardy
