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

#include "jeopardy/typecheck.h"

#include <optional>
#include <set>

#include "jeopardy/unify.h"

namespace jeopardy::typecheck {

namespace {

// LinearityFault that remembers where the overlapping composition happened.
class ReuseFault : public LinearityFault {
 public:
  ReuseFault(Name variable, SourceSpan span) : LinearityFault(std::move(variable)), span(span) {}
  SourceSpan span;
};

TypingEnv composeAt(const TypingEnv& lhs, const TypingEnv& rhs, SourceSpan span) {
  try {
    return lhs.compose(rhs);
  } catch (const LinearityFault& fault) {
    throw ReuseFault(fault.variable(), span);
  }
}

std::string quoted(const Name& name) { return "'" + name + "'"; }

struct Typed {
  Name type;
  TypingEnv used;
};

class Checker {
 public:
  explicit Checker(const Program& program) : program_(program) {}

  TypingEnv bind(const Pattern& p, const Name& type) const {
    if (p.isVariable()) return TypingEnv::singleton(p.name, type);
    const Constructor& c = constructorOf(p, type);
    TypingEnv out;
    for (std::size_t i = 0; i < p.args.size(); ++i) {
      out = composeAt(out, bind(p.args[i], c.argTypes[i]), p.span);
    }
    return out;
  }

  Typed synth(const TypingEnv& avail, const Term& t) {
    switch (t.kind) {
      case Term::Kind::Pattern:
        return synthPattern(avail, t.pattern);
      case Term::Kind::Application:
        return synthApplication(avail, t);
      case Term::Kind::Case:
        return synthCase(avail, t);
    }
    return {};
  }

  Name inverse(const TypingEnv& sigma, const FunctionRef& ref, const Pattern& arg) {
    const Function& f = function(ref);
    checkInverseBody(f);
    Typed a = synthPattern(sigma, arg);
    expect(a.type, f.resultType, "argument of " + describe(ref), arg.span);
    requireExact(sigma, a.used, arg.span);
    return f.argType;
  }

  void requireExact(const TypingEnv& sigma, const TypingEnv& used, SourceSpan span) const {
    for (const auto& [name, type] : sigma) {
      if (!used.contains(name)) {
        throw TypeError("T003", "variable " + quoted(name) + " is never used", span);
      }
    }
  }

  TypingEnv unbind(const Term& t, const Name& type) {
    switch (t.kind) {
      case Term::Kind::Pattern:
        return bind(t.pattern, type);
      case Term::Kind::Application: {
        const Function& f = function(t.function);
        const Name& produced = t.function.runsInverted() ? f.argType : f.resultType;
        const Name& consumed = t.function.runsInverted() ? f.resultType : f.argType;
        expect(produced, type, describe(t.function), t.span);
        return bind(t.pattern, consumed);
      }
      case Term::Kind::Case: {
        std::optional<TypingEnv> residual;
        for (const CaseBranch& b : t.branches) {
          TypingEnv body = unbind(b.body, type);
          TypingEnv bound = bind(b.pattern, t.annotation);
          for (const auto& [name, ty] : bound) {
            const Name* inferred = body.lookup(name);
            if (inferred == nullptr) {
              throw TypeError("T003", "variable " + quoted(name) + " is never used",
                              b.pattern.span);
            }
            expect(*inferred, ty, "variable " + quoted(name), b.pattern.span);
          }
          TypingEnv rest = body.subtract(bound.domain());
          if (residual && !(*residual == rest)) {
            throw TypeError("T003",
                            "branches use different outer variables: " + toString(*residual) +
                                " versus " + toString(rest),
                            b.body.span.known() ? b.body.span : t.span);
          }
          residual = std::move(rest);
        }
        TypingEnv selector = unbind(*t.selector, t.annotation);
        return composeAt(residual.value_or(TypingEnv{}), selector, t.span);
      }
    }
    return {};
  }

 private:
  const Constructor& constructorOf(const Pattern& p, const Name& type) const {
    auto info = program_.findConstructor(p.name);
    if (!info) {
      throw TypeError("T005", "unknown constructor " + quoted(p.name), p.span);
    }
    if (info->type->name != type) {
      throw TypeError("T005",
                      "constructor " + quoted(p.name) + " belongs to " +
                          quoted(info->type->name) + ", expected a " + quoted(type),
                      p.span);
    }
    if (info->constructor->argTypes.size() != p.args.size()) {
      throw TypeError("T005", "constructor " + quoted(p.name) + " has the wrong arity", p.span);
    }
    return *info->constructor;
  }

  const Function& function(const FunctionRef& ref) const {
    const Function* f = program_.findFunction(ref.base);
    if (f == nullptr) throw TypeError("T001", "unknown function " + quoted(ref.base), ref.span);
    return *f;
  }

  static std::string describe(const FunctionRef& ref) {
    std::string out = ref.base;
    for (unsigned i = 0; i < ref.inversions; ++i) out = "(invert " + out + ")";
    return quoted(out);
  }

  static void expect(const Name& actual, const Name& wanted, const std::string& what,
                     SourceSpan span) {
    if (actual != wanted) {
      throw TypeError("T005",
                      what + " has type " + quoted(actual) + ", expected " + quoted(wanted),
                      span);
    }
  }

  Typed synthPattern(const TypingEnv& avail, const Pattern& p) const {
    if (p.isVariable()) {
      const Name* type = avail.lookup(p.name);
      if (type == nullptr) {
        throw TypeError("T001", "unbound variable " + quoted(p.name), p.span);
      }
      return {*type, TypingEnv::singleton(p.name, *type)};
    }
    auto info = program_.findConstructor(p.name);
    if (!info || info->constructor->argTypes.size() != p.args.size()) {
      throw TypeError("T005", "ill-formed constructor " + quoted(p.name), p.span);
    }
    TypingEnv used;
    for (std::size_t i = 0; i < p.args.size(); ++i) {
      Typed arg = synthPattern(avail, p.args[i]);
      expect(arg.type, info->constructor->argTypes[i],
             "argument " + std::to_string(i + 1) + " of " + quoted(p.name), p.args[i].span);
      used = composeAt(used, arg.used, p.span);
    }
    return {info->type->name, std::move(used)};
  }

  Typed synthApplication(const TypingEnv& avail, const Term& t) {
    const Function& f = function(t.function);
    Typed arg = synthPattern(avail, t.pattern);
    if (t.function.runsInverted()) {
      checkInverseBody(f);
      expect(arg.type, f.resultType, "argument of " + describe(t.function), t.pattern.span);
      return {f.argType, std::move(arg.used)};
    }
    expect(arg.type, f.argType, "argument of " + describe(t.function), t.pattern.span);
    return {f.resultType, std::move(arg.used)};
  }

  Typed synthCase(const TypingEnv& avail, const Term& t) {
    Typed selector = synth(avail, *t.selector);
    expect(selector.type, t.annotation, "case selector", t.selector->span.known()
                                                             ? t.selector->span
                                                             : t.span);
    std::optional<Typed> agreed;
    for (const CaseBranch& b : t.branches) {
      TypingEnv bound = bind(b.pattern, t.annotation);
      Typed body = synth(avail.shadowedBy(bound), b.body);
      SourceSpan where = b.body.span.known() ? b.body.span : b.pattern.span;
      for (const auto& [name, type] : bound) {
        if (!body.used.contains(name)) {
          throw TypeError("T003", "variable " + quoted(name) + " is never used", b.pattern.span);
        }
      }
      TypingEnv rest = body.used.subtract(bound.domain());
      if (agreed) {
        if (agreed->type != body.type) {
          throw TypeError("T004",
                          "branch has type " + quoted(body.type) + " but an earlier branch has " +
                              quoted(agreed->type),
                          where);
        }
        if (!(agreed->used == rest)) {
          throw TypeError("T003",
                          "branches use different outer variables: " + toString(agreed->used) +
                              " versus " + toString(rest),
                          where);
        }
      } else {
        agreed = Typed{body.type, std::move(rest)};
      }
    }
    if (!agreed) throw TypeError("T004", "case without branches", t.span);
    return {agreed->type, composeAt(selector.used, agreed->used, t.span)};
  }

  // The inverse-application premise: the body's inferred environment must
  // type the parameter pattern exactly.
  void checkInverseBody(const Function& f) {
    auto [it, fresh] = inverseChecked_.emplace(f.name, false);
    if (!fresh) return;
    TypingEnv sigma = unbind(f.body, f.resultType);
    Typed param = synthPattern(sigma, f.param);
    expect(param.type, f.argType, "parameter of " + quoted(f.name), f.param.span);
    requireExact(sigma, param.used, f.span);
    it->second = true;
  }

  const Program& program_;
  std::map<Name, bool> inverseChecked_;
};

Diagnostic toDiagnostic(const TypeError& e) {
  return {Severity::Error, e.code, e.what(), e.span};
}

Diagnostic toDiagnostic(const LinearityFault& e, SourceSpan fallback) {
  const auto* reuse = dynamic_cast<const ReuseFault*>(&e);
  SourceSpan span = reuse != nullptr && reuse->span.known() ? reuse->span : fallback;
  return {Severity::Error, "T002", "variable '" + e.variable() + "' is used more than once",
          span};
}

}  // namespace

TypingEnv bindTypes(const Program& program, const Pattern& pattern, const Name& type) {
  return Checker(program).bind(pattern, type);
}

Name checkTerm(const Program& program, const TypingEnv& sigma, const Term& term) {
  Checker checker(program);
  Typed typed = checker.synth(sigma, term);
  checker.requireExact(sigma, typed.used, term.span);
  return typed.type;
}

Name checkInverse(const Program& program, const TypingEnv& sigma, const FunctionRef& ref,
                  const Pattern& argument) {
  if (!ref.runsInverted()) {
    return checkTerm(program, sigma, Term::application(ref, argument, ref.span));
  }
  return Checker(program).inverse(sigma, ref, argument);
}

TypingEnv unbindTypes(const Program& program, const Term& term, const Name& type) {
  return Checker(program).unbind(term, type);
}

std::vector<Diagnostic> TypeReport::diagnostics() const {
  std::vector<Diagnostic> out;
  for (const FunctionVerdict& f : functions) {
    out.insert(out.end(), f.diagnostics.begin(), f.diagnostics.end());
  }
  return out;
}

const FunctionVerdict* TypeReport::find(const Name& name) const {
  for (const FunctionVerdict& f : functions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

TypeReport checkProgram(const Program& program) {
  TypeReport report;
  report.accepted = true;
  for (const Function& f : program.functions()) {
    FunctionVerdict verdict{f.name, true, {}};
    try {
      Checker checker(program);
      TypingEnv sigma = checker.bind(f.param, f.argType);
      Typed body = checker.synth(sigma, f.body);
      if (body.type != f.resultType) {
        throw TypeError("T005",
                        "body of '" + f.name + "' has type '" + body.type + "', declared '" +
                            f.resultType + "'",
                        f.body.span.known() ? f.body.span : f.span);
      }
      checker.requireExact(sigma, body.used, f.param.span.known() ? f.param.span : f.span);
    } catch (const TypeError& e) {
      verdict.accepted = false;
      verdict.diagnostics.push_back(toDiagnostic(e));
    } catch (const LinearityFault& e) {
      verdict.accepted = false;
      verdict.diagnostics.push_back(toDiagnostic(e, f.span));
    }
    report.accepted = report.accepted && verdict.accepted;
    report.functions.push_back(std::move(verdict));
  }
  if (!program.mains().empty()) {
    const FunctionVerdict* main = report.find(program.main().base);
    report.accepted = report.accepted && main != nullptr && main->accepted;
  }
  return report;
}

}  // namespace jeopardy::typecheck
