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

#include "jeopardy/desugar.h"

#include <map>
#include <set>
#include <stdexcept>

namespace jeopardy::frontend {

namespace {

struct DesugarError : std::runtime_error {
  DesugarError(std::string code, std::string message, SourceSpan span)
      : std::runtime_error(std::move(message)), code(std::move(code)), span(span) {}
  std::string code;
  SourceSpan span;
};

struct Signature {
  Name argType;
  Name resultType;
};

struct ConstructorEntry {
  Name type;
  std::vector<Name> argTypes;
};

using Scope = std::map<Name, Name>;

class Desugarer {
 public:
  explicit Desugarer(const std::vector<Declaration>& decls) : decls_(decls) {}

  DesugarResult run() {
    collectTables();
    std::vector<DataType> datatypes;
    std::vector<Function> functions;
    std::vector<MainDecl> mains;
    for (std::size_t i = 0; i < decls_.size();) {
      const Declaration& d = decls_[i];
      if (const auto* data = std::get_if<DataType>(&d)) {
        datatypes.push_back(*data);
        ++i;
      } else if (const auto* main = std::get_if<MainDecl>(&d)) {
        mains.push_back(*main);
        ++i;
      } else {
        std::size_t end = groupEnd(i);
        if (unsigned_.count(std::get<SurfaceClause>(d).name) != 0) {
          i = end;
          continue;
        }
        try {
          functions.push_back(lowerGroup(i, end));
        } catch (const DesugarError& e) {
          diagnostics_.push_back({Severity::Error, e.code, e.what(), e.span});
        }
        i = end;
      }
    }
    return {Program(std::move(datatypes), std::move(functions), std::move(mains)),
            std::move(diagnostics_)};
  }

 private:
  std::size_t groupEnd(std::size_t begin) const {
    const Name& name = std::get<SurfaceClause>(decls_[begin]).name;
    std::size_t end = begin + 1;
    while (end < decls_.size()) {
      const auto* c = std::get_if<SurfaceClause>(&decls_[end]);
      if (c == nullptr || c->name != name) break;
      ++end;
    }
    return end;
  }

  // Constructor and function signature tables, plus grouping diagnostics.
  void collectTables() {
    for (const Declaration& d : decls_) {
      if (const auto* data = std::get_if<DataType>(&d)) {
        for (const Constructor& c : data->constructors) {
          constructors_.try_emplace(c.name, ConstructorEntry{data->name, c.argTypes});
        }
      }
    }
    std::set<Name> seen;
    for (std::size_t i = 0; i < decls_.size();) {
      const auto* clause = std::get_if<SurfaceClause>(&decls_[i]);
      if (clause == nullptr) {
        ++i;
        continue;
      }
      std::size_t end = groupEnd(i);
      if (!seen.insert(clause->name).second) {
        diagnostics_.push_back({Severity::Error, "V007",
                                "clauses of function '" + clause->name +
                                    "' must be consecutive",
                                clause->span});
      } else {
        try {
          signatures_.emplace(clause->name, groupSignature(i, end));
        } catch (const DesugarError& e) {
          diagnostics_.push_back({Severity::Error, e.code, e.what(), e.span});
          unsigned_.insert(clause->name);
        }
      }
      i = end;
    }
  }

  Signature groupSignature(std::size_t begin, std::size_t end) const {
    std::optional<Name> arg, result;
    for (std::size_t i = begin; i < end; ++i) {
      const auto& c = std::get<SurfaceClause>(decls_[i]);
      auto merge = [&](std::optional<Name>& slot, const std::optional<Name>& given,
                       const char* what) {
        if (!given) return;
        if (slot && *slot != *given) {
          throw DesugarError("V008",
                             "conflicting " + std::string(what) + " annotations for '" +
                                 c.name + "': '" + *slot + "' and '" + *given + "'",
                             c.span);
        }
        slot = given;
      };
      merge(arg, c.argType, "parameter type");
      merge(result, c.resultType, "result type");
    }
    const auto& first = std::get<SurfaceClause>(decls_[begin]);
    if (!arg || !result) {
      throw DesugarError("V008",
                         "function '" + first.name +
                             "' needs a parameter and a result type annotation, "
                             "as in \"f (p : tau) : tau' = t.\"",
                         first.span);
    }
    return {*arg, *result};
  }

  Name fresh() { return "%" + std::to_string(counter_++); }

  void bindScope(const Pattern& p, const Name& type, Scope& scope) const {
    if (p.isVariable()) {
      scope[p.name] = type;
      return;
    }
    auto it = constructors_.find(p.name);
    if (it == constructors_.end()) return;
    for (std::size_t i = 0; i < p.args.size() && i < it->second.argTypes.size(); ++i) {
      bindScope(p.args[i], it->second.argTypes[i], scope);
    }
  }

  Function lowerGroup(std::size_t begin, std::size_t end) {
    const auto& first = std::get<SurfaceClause>(decls_[begin]);
    auto sig = signatures_.find(first.name);
    if (sig == signatures_.end()) {
      throw DesugarError("V007", "function '" + first.name + "' is defined more than once",
                         first.span);
    }
    counter_ = 0;
    Function f;
    f.name = first.name;
    f.argType = sig->second.argType;
    f.resultType = sig->second.resultType;
    f.span = first.span;
    if (end - begin == 1) {
      Scope scope;
      bindScope(first.param, f.argType, scope);
      f.param = first.param;
      f.body = lower(first.body, scope);
      return f;
    }
    Name param = fresh();
    std::vector<CaseBranch> branches;
    SourceSpan last = first.span;
    for (std::size_t i = begin; i < end; ++i) {
      const auto& c = std::get<SurfaceClause>(decls_[i]);
      Scope scope;
      bindScope(c.param, f.argType, scope);
      branches.push_back({c.param, lower(c.body, scope)});
      last = c.span;
    }
    f.param = Pattern::variable(param, first.param.span);
    f.body = Term::caseOf(Term::fromPattern(Pattern::variable(param, first.param.span)),
                          f.argType, std::move(branches), SourceSpan::cover(first.span, last));
    f.span = SourceSpan::cover(first.span, last);
    return f;
  }

  const ConstructorEntry& constructor(const Name& name, SourceSpan span) const {
    auto it = constructors_.find(name);
    if (it == constructors_.end()) {
      throw DesugarError("V001", "unknown constructor '" + name + "'", span);
    }
    return it->second;
  }

  const Signature& signature(const Name& name, SourceSpan span) const {
    auto it = signatures_.find(name);
    if (it == signatures_.end()) {
      throw DesugarError("V004", "unknown function '" + name + "'", span);
    }
    return it->second;
  }

  Name constructorName(const SurfaceTerm& t) const {
    switch (t.kind) {
      case SurfaceTerm::Kind::Tuple: return "pair";
      case SurfaceTerm::Kind::Cons: return "cons";
      case SurfaceTerm::Kind::Nil: return "nil";
      default: return t.name;
    }
  }

  // The datatype a surface term evaluates to, for unannotated let.
  std::optional<Name> guessType(const SurfaceTerm& t, const Scope& scope) const {
    switch (t.kind) {
      case SurfaceTerm::Kind::Variable: {
        auto it = scope.find(t.name);
        if (it == scope.end()) return std::nullopt;
        return it->second;
      }
      case SurfaceTerm::Kind::Constructor:
      case SurfaceTerm::Kind::Tuple:
      case SurfaceTerm::Kind::Cons:
      case SurfaceTerm::Kind::Nil: {
        auto it = constructors_.find(constructorName(t));
        if (it == constructors_.end()) return std::nullopt;
        return it->second.type;
      }
      case SurfaceTerm::Kind::Application: {
        auto it = signatures_.find(t.function.base);
        if (it == signatures_.end()) return std::nullopt;
        return t.function.runsInverted() ? it->second.argType : it->second.resultType;
      }
      case SurfaceTerm::Kind::Case: {
        Scope inner = scope;
        bindScope(t.branches.front().pattern, *t.annotation, inner);
        return guessType(t.branches.front().body, inner);
      }
      case SurfaceTerm::Kind::Let: {
        Scope inner = scope;
        if (auto bound = t.annotation ? t.annotation : guessType(t.items[0], scope)) {
          bindScope(t.pattern, *bound, inner);
        }
        return guessType(t.items[1], inner);
      }
    }
    return std::nullopt;
  }

  Term lower(const SurfaceTerm& t, const Scope& scope) {
    if (auto p = asPattern(t)) return Term::fromPattern(std::move(*p));
    switch (t.kind) {
      case SurfaceTerm::Kind::Constructor:
      case SurfaceTerm::Kind::Tuple:
      case SurfaceTerm::Kind::Cons: {
        Name name = constructorName(t);
        const ConstructorEntry& entry = constructor(name, t.span);
        if (entry.argTypes.size() != t.items.size()) {
          throw DesugarError("V002",
                             "constructor '" + name + "' expects " +
                                 std::to_string(entry.argTypes.size()) + " argument(s), got " +
                                 std::to_string(t.items.size()),
                             t.span);
        }
        struct Binding {
          Term selector;
          Name type;
          Name var;
          SourceSpan span;
        };
        std::vector<Binding> bindings;
        std::vector<Pattern> args;
        for (std::size_t i = 0; i < t.items.size(); ++i) {
          const SurfaceTerm& item = t.items[i];
          if (auto p = asPattern(item)) {
            args.push_back(std::move(*p));
            continue;
          }
          Name var = fresh();
          bindings.push_back({lower(item, scope), entry.argTypes[i], var, item.span});
          args.push_back(Pattern::variable(var, item.span));
        }
        Term result = Term::fromPattern(Pattern::constructor(name, std::move(args), t.span));
        for (auto it = bindings.rbegin(); it != bindings.rend(); ++it) {
          std::vector<CaseBranch> branch;
          branch.push_back({Pattern::variable(it->var, it->span), std::move(result)});
          result = Term::caseOf(std::move(it->selector), it->type, std::move(branch), t.span);
        }
        return result;
      }
      case SurfaceTerm::Kind::Application: {
        const Signature& sig = signature(t.function.base, t.function.span);
        const SurfaceTerm& arg = t.items.front();
        if (auto p = asPattern(arg)) return Term::application(t.function, std::move(*p), t.span);
        Name type = t.function.runsInverted() ? sig.resultType : sig.argType;
        Name var = fresh();
        Term selector = lower(arg, scope);
        std::vector<CaseBranch> branch;
        branch.push_back({Pattern::variable(var, arg.span),
                          Term::application(t.function, Pattern::variable(var, arg.span),
                                            t.span)});
        return Term::caseOf(std::move(selector), type, std::move(branch), t.span);
      }
      case SurfaceTerm::Kind::Case: {
        Term selector = lower(t.items.front(), scope);
        std::vector<CaseBranch> branches;
        for (const SurfaceBranch& b : t.branches) {
          Scope inner = scope;
          bindScope(b.pattern, *t.annotation, inner);
          branches.push_back({b.pattern, lower(b.body, inner)});
        }
        return Term::caseOf(std::move(selector), *t.annotation, std::move(branches), t.span);
      }
      case SurfaceTerm::Kind::Let: {
        std::optional<Name> type = t.annotation ? t.annotation : guessType(t.items[0], scope);
        if (!type) {
          throw DesugarError("V009",
                             "cannot determine the type of the let-bound term; "
                             "write \"let p : tau = t in ...\"",
                             t.span);
        }
        Term selector = lower(t.items[0], scope);
        Scope inner = scope;
        bindScope(t.pattern, *type, inner);
        std::vector<CaseBranch> branch;
        branch.push_back({t.pattern, lower(t.items[1], inner)});
        return Term::caseOf(std::move(selector), *type, std::move(branch), t.span);
      }
      case SurfaceTerm::Kind::Variable:
      case SurfaceTerm::Kind::Nil:
        break;
    }
    throw DesugarError("P002", "internal: unexpected surface term", t.span);
  }

  const std::vector<Declaration>& decls_;
  std::map<Name, ConstructorEntry> constructors_;
  std::map<Name, Signature> signatures_;
  std::set<Name> unsigned_;
  std::vector<Diagnostic> diagnostics_;
  int counter_ = 0;
};

}  // namespace

DesugarResult desugar(const std::vector<Declaration>& declarations) {
  return Desugarer(declarations).run();
}

}  // namespace jeopardy::frontend
