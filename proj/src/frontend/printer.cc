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

#include "jeopardy/printer.h"

#include "jeopardy/unify.h"

namespace jeopardy::frontend {

namespace {

bool isSugar(const Value& v, std::string_view name, std::size_t arity) {
  return v.isConstructor() && v.name == name && v.args.size() == arity;
}

std::string valueIn(const Value& v, bool atomic) {
  if (isSugar(v, "pair", 2)) {
    return "(" + valueIn(v.args[0], false) + ", " + valueIn(v.args[1], false) + ")";
  }
  if (isSugar(v, "nil", 0)) return "[]";
  if (isSugar(v, "cons", 2)) {
    std::string s = valueIn(v.args[0], true) + " : " + valueIn(v.args[1], false);
    return atomic ? "(" + s + ")" : s;
  }
  std::string out = "[" + v.name;
  for (const Value& a : v.args) out += " " + valueIn(a, true);
  return out + "]";
}

std::string functionRef(const FunctionRef& ref) {
  std::string out = ref.base;
  for (unsigned i = 0; i < ref.inversions; ++i) out = "(invert " + out + ")";
  return out;
}

std::string patternTerm(const Pattern& p, bool atomic) {
  if (p.isGround()) return valueIn(p, atomic);
  return printPattern(p);
}

std::string indentOf(int depth) { return std::string(static_cast<std::size_t>(depth) * 2, ' '); }

std::string coreTerm(const Term& t, int depth, bool wrapCase) {
  switch (t.kind) {
    case Term::Kind::Pattern:
      return patternTerm(t.pattern, false);
    case Term::Kind::Application:
      return functionRef(t.function) + " " + patternTerm(t.pattern, true);
    case Term::Kind::Case: {
      std::string out = "case " + coreTerm(*t.selector, depth + 1, true) + " : " +
                        t.annotation + " of";
      for (std::size_t i = 0; i < t.branches.size(); ++i) {
        const CaseBranch& b = t.branches[i];
        bool last = i + 1 == t.branches.size();
        out += "\n" + indentOf(depth + 1) + printPattern(b.pattern) + " -> " +
               coreTerm(b.body, depth + 2, !last);
        if (!last) out += ";";
      }
      return wrapCase ? "(" + out + ")" : out;
    }
  }
  return {};
}

enum class Position { Tail, Atom, ConsHead, Inner };

std::string surface(const SurfaceTerm& t, Position pos) {
  using Kind = SurfaceTerm::Kind;
  auto wrap = [&](std::string s, bool needed) { return needed ? "(" + s + ")" : s; };
  bool open = t.kind == Kind::Case || t.kind == Kind::Let;
  switch (t.kind) {
    case Kind::Variable:
      return t.name;
    case Kind::Nil:
      return "[]";
    case Kind::Constructor: {
      std::string out = "[" + t.name;
      for (const SurfaceTerm& a : t.items) out += " " + surface(a, Position::Atom);
      return out + "]";
    }
    case Kind::Tuple:
      return "(" + surface(t.items[0], Position::Tail) + ", " +
             surface(t.items[1], Position::Tail) + ")";
    case Kind::Cons: {
      std::string s = surface(t.items[0], Position::ConsHead) + " : " +
                      surface(t.items[1], Position::Inner);
      return wrap(std::move(s), pos == Position::Atom || pos == Position::ConsHead);
    }
    case Kind::Application: {
      std::string s = functionRef(t.function) + " " + surface(t.items[0], Position::Atom);
      return wrap(std::move(s), pos == Position::Atom);
    }
    case Kind::Case: {
      std::string s = "case " + surface(t.items[0], Position::Inner) + " : " + *t.annotation +
                      " of ";
      for (std::size_t i = 0; i < t.branches.size(); ++i) {
        bool last = i + 1 == t.branches.size();
        s += printPattern(t.branches[i].pattern) + " -> " +
             surface(t.branches[i].body, last ? Position::Tail : Position::Inner);
        if (!last) s += "; ";
      }
      return wrap(std::move(s), open && pos != Position::Tail);
    }
    case Kind::Let: {
      std::string s = "let " + printPattern(t.pattern);
      if (t.annotation) s += " : " + *t.annotation;
      s += " = " + surface(t.items[0], Position::Inner) + " in " +
           surface(t.items[1], Position::Tail);
      return wrap(std::move(s), open && pos != Position::Tail);
    }
  }
  return {};
}

}  // namespace

std::string printValue(const Value& value) { return valueIn(value, false); }

std::string printPattern(const Pattern& pattern) { return toString(pattern); }

std::string printTerm(const Term& term) { return coreTerm(term, 0, false); }

std::string printProgram(const Program& program) {
  std::string out;
  for (const DataType& d : program.datatypes()) {
    out += "data " + d.name + " =";
    for (const Constructor& c : d.constructors) {
      out += " [" + c.name;
      for (const Name& a : c.argTypes) out += " " + a;
      out += "]";
    }
    out += ".\n";
  }
  for (const Function& f : program.functions()) {
    out += "\n" + f.name + " (" + printPattern(f.param) + " : " + f.argType + ") : " +
           f.resultType + " =\n  " + coreTerm(f.body, 1, false) + ".\n";
  }
  for (const MainDecl& m : program.mains()) {
    out += "\nmain " + functionRef(m.ref) + ".\n";
  }
  return out;
}

std::string printSurfaceTerm(const SurfaceTerm& term) { return surface(term, Position::Tail); }

std::string printSurface(const std::vector<Declaration>& declarations) {
  std::string out;
  for (const Declaration& d : declarations) {
    if (const auto* data = std::get_if<DataType>(&d)) {
      out += "data " + data->name + " =";
      for (const Constructor& c : data->constructors) {
        out += " [" + c.name;
        for (const Name& a : c.argTypes) out += " " + a;
        out += "]";
      }
      out += ".\n";
    } else if (const auto* clause = std::get_if<SurfaceClause>(&d)) {
      out += clause->name + " ";
      if (clause->argType) {
        out += "(" + printPattern(clause->param) + " : " + *clause->argType + ")";
      } else {
        out += printPattern(clause->param);
      }
      if (clause->resultType) out += " : " + *clause->resultType;
      out += " = " + surface(clause->body, Position::Tail) + ".\n";
    } else {
      out += "main " + functionRef(std::get<MainDecl>(d).ref) + ".\n";
    }
  }
  return out;
}

}  // namespace jeopardy::frontend
