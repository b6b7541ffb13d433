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

#include "jeopardy/interp.h"

#include <cstdlib>
#include <string_view>

#include "jeopardy/unify.h"
#include "large_stack.h"

namespace jeopardy::interp {

namespace {

struct Violation {
  ViolationKind kind;
  std::string message;
  SourceSpan span;
};

struct OutOfBudget {
  std::string message;
};

bool recoverable(const Violation& v) {
  return v.kind == ViolationKind::MatchFailure || v.kind == ViolationKind::PsiViolation;
}

class Engine {
 public:
  Engine(const Program& program, const Options& options)
      : program_(program), options_(options), fuel_(options.fuel) {}

  Value eval(const Environment& gamma, const Term& t) {
    Frame frame(*this);
    switch (t.kind) {
      case Term::Kind::Pattern:
        return evalPattern(gamma, t.pattern);
      case Term::Kind::Application:
        return app(gamma, t.function, t.pattern, false, t.span);
      case Term::Kind::Case:
        return evalCase(gamma, t);
    }
    return {};
  }

  // Conventional evaluation of "g p", or of "(invert g) p" when flip is set.
  Value app(const Environment& gamma, const FunctionRef& ref, const Pattern& arg, bool flip,
            SourceSpan span) {
    Frame frame(*this);
    tick();
    const Function& f = function(ref);
    Value input = evalPattern(gamma, arg);
    if (ref.runsInverted() == flip) {
      auto bound = unify(input, f.param);
      if (!bound) {
        throw Violation{ViolationKind::MatchFailure,
                        "argument " + toString(input) + " does not match the parameter " +
                            toString(f.param) + " of '" + f.name + "'",
                        span};
      }
      Value out = eval(*bound, f.body);
      emit(ref.inversions > 0 ? "DownInversion" : "DownApplication", span, out);
      return out;
    }
    std::optional<Environment> found = infer(f.body, input);
    std::optional<Value> out = found ? substitute(f.param, *found) : std::nullopt;
    if (!out) {
      throw Violation{ViolationKind::MatchFailure,
                      "no preimage: '" + f.name + "' cannot produce " + toString(input), span};
    }
    emit("UpApplication", span, *out);
    return *out;
  }

  std::optional<Environment> infer(const Term& t, const Value& v) {
    Frame frame(*this);
    Budget budget(*this);
    switch (t.kind) {
      case Term::Kind::Pattern:
        return inferPattern(t.pattern, v);
      case Term::Kind::Application:
        return inferApp(t.function, t.pattern, v, false, t.span);
      case Term::Kind::Case:
        return inferCase(t, v);
    }
    return std::nullopt;
  }

  // The environment under which "g p" (or "(invert g) p" when flip is set)
  // evaluates to v.
  std::optional<Environment> inferApp(const FunctionRef& ref, const Pattern& arg,
                                      const Value& v, bool flip, SourceSpan span) {
    Frame frame(*this);
    Budget budget(*this);
    tick();
    const Function& f = function(ref);
    std::optional<Value> input;
    if (ref.runsInverted() == flip) {
      auto body = infer(f.body, v);
      if (!body) return std::nullopt;
      input = substitute(f.param, *body);
    } else {
      auto bound = unify(v, f.param);
      if (!bound) return std::nullopt;
      try {
        input = eval(*bound, f.body);
      } catch (const Violation& violation) {
        if (!recoverable(violation)) throw;
        return std::nullopt;
      }
    }
    if (!input) return std::nullopt;
    auto out = inferPattern(arg, *input);
    if (out) emit(ref.runsInverted() == flip ? "InferApplication" : "InferUpApplication", span, v);
    return out;
  }

 private:
  // Counts nesting and gives up past the depth limit.
  struct Frame {
    explicit Frame(Engine& e) : engine(e) {
      if (++engine.depth_ > engine.options_.depthLimit) {
        --engine.depth_;
        throw OutOfBudget{"depth limit of " + std::to_string(engine.options_.depthLimit) +
                          " reached"};
      }
    }
    ~Frame() { --engine.depth_; }
    Engine& engine;
  };

  // Marks a region whose rule applications spend fuel.
  struct Budget {
    explicit Budget(Engine& e) : engine(e) { ++engine.budgeted_; }
    ~Budget() { --engine.budgeted_; }
    Engine& engine;
  };

  void tick() {
    ++steps_;
    if (options_.stepLimit && steps_ > *options_.stepLimit) {
      throw OutOfBudget{"step limit of " + std::to_string(*options_.stepLimit) + " reached"};
    }
    if (budgeted_ > 0) {
      if (fuel_ == 0) {
        throw OutOfBudget{"fuel exhausted after " + std::to_string(options_.fuel) +
                          " rule applications"};
      }
      --fuel_;
    }
  }

  void emit(std::string_view rule, SourceSpan span, const Value& v) const {
    if (options_.trace) options_.trace(TraceEvent{std::string(rule), span, toString(v)});
  }

  void emit(std::string_view rule, SourceSpan span, const Environment& env) const {
    if (options_.trace) options_.trace(TraceEvent{std::string(rule), span, toString(env)});
  }

  const Function& function(const FunctionRef& ref) const {
    const Function* f = program_.findFunction(ref.base);
    if (f == nullptr) {
      throw Violation{ViolationKind::UnknownFunction, "unknown function '" + ref.base + "'",
                      ref.span};
    }
    return *f;
  }

  Value evalPattern(const Environment& gamma, const Pattern& p) {
    tick();
    if (p.isVariable()) {
      const Value* v = gamma.lookup(p.name);
      if (v == nullptr) {
        throw Violation{ViolationKind::UnboundVariable, "unbound variable '" + p.name + "'",
                        p.span};
      }
      emit("DownVariable", p.span, *v);
      return *v;
    }
    std::vector<Value> args;
    args.reserve(p.args.size());
    for (const Pattern& a : p.args) args.push_back(evalPattern(gamma, a));
    Value out = Pattern::constructor(p.name, std::move(args));
    emit("DownConstructor", p.span, out);
    return out;
  }

  std::optional<Environment> inferPattern(const Pattern& p, const Value& v) {
    tick();
    if (p.isVariable()) {
      emit("InferVariable", p.span, v);
      return Environment::singleton(p.name, v);
    }
    if (!v.isConstructor() || v.name != p.name || v.args.size() != p.args.size()) {
      return std::nullopt;
    }
    Environment out;
    for (std::size_t i = 0; i < p.args.size(); ++i) {
      auto part = inferPattern(p.args[i], v.args[i]);
      if (!part) return std::nullopt;
      out = out.compose(*part);
    }
    emit("InferConstructor", p.span, out);
    return out;
  }

  Value evalCase(const Environment& gamma, const Term& t) {
    tick();
    Value selected = eval(gamma, *t.selector);
    std::size_t chosen = t.branches.size();
    std::optional<Environment> bound;
    for (std::size_t i = 0; i < t.branches.size() && !bound; ++i) {
      bound = unify(selected, t.branches[i].pattern);
      if (bound) chosen = i;
    }
    if (!bound) {
      throw Violation{ViolationKind::MatchFailure,
                      "no branch matches " + toString(selected), t.span};
    }
    Value out = eval(gamma.shadowedBy(*bound), t.branches[chosen].body);
    if (options_.psiMode == PsiMode::Enforce) {
      const Value& target = options_.psiTarget == PsiTarget::Result ? out : selected;
      for (std::size_t j = 0; j < chosen; ++j) {
        if (producible(t.branches[j].body, target)) {
          throw Violation{ViolationKind::PsiViolation,
                          "branch " + std::to_string(j + 1) + " could also produce " +
                              toString(target) + " (taken branch " +
                              std::to_string(chosen + 1) + ")",
                          t.branches[chosen].body.span.known() ? t.branches[chosen].body.span
                                                               : t.span};
        }
      }
    }
    emit("DownCases", t.span, out);
    return out;
  }

  // Whether an earlier branch body can evaluate to v.
  bool producible(const Term& body, const Value& v) {
    if (options_.fastPath && body.isPattern() && body.pattern.isConstructor()) {
      if (options_.brokenFastPath) return false;
      if (body.pattern.name != v.name || body.pattern.args.size() != v.args.size()) {
        return false;
      }
    }
    try {
      return infer(body, v).has_value();
    } catch (const Violation& violation) {
      if (!recoverable(violation)) throw;
      return false;
    }
  }

  std::optional<Environment> inferCase(const Term& t, const Value& v) {
    tick();
    for (std::size_t i = 0; i < t.branches.size(); ++i) {
      const CaseBranch& branch = t.branches[i];
      std::optional<Environment> inner;
      try {
        inner = infer(branch.body, v);
      } catch (const Violation& violation) {
        if (!recoverable(violation)) throw;
        continue;
      }
      if (!inner) continue;
      std::optional<Value> selected = substitute(branch.pattern, *inner);
      if (!selected) continue;
      for (std::size_t j = 0; j < i; ++j) {
        if (unify(*selected, t.branches[j].pattern)) {
          throw Violation{ViolationKind::PsiViolation,
                          "ambiguous: branch " + std::to_string(i + 1) + " produces " +
                              toString(v) + " from " + toString(*selected) +
                              ", which branch " + std::to_string(j + 1) + " also matches",
                          t.span};
        }
      }
      std::optional<Environment> outer;
      try {
        outer = infer(*t.selector, *selected);
      } catch (const Violation& violation) {
        if (!recoverable(violation)) throw;
        continue;
      }
      if (!outer) continue;
      Environment out = inner->subtract(patternVars(branch.pattern)).compose(*outer);
      emit("InferCases", t.span, out);
      return out;
    }
    return std::nullopt;
  }

  const Program& program_;
  const Options& options_;
  std::uint64_t fuel_;
  std::uint64_t steps_ = 0;
  std::size_t depth_ = 0;
  int budgeted_ = 0;
};

template <typename Body>
Outcome runOutcome(Body body) {
  Outcome out;
  runOnLargeStack([&] {
    try {
      out = Outcome::success(body());
    } catch (const Violation& v) {
      out = Outcome::violation(v.kind, v.message, v.span);
    } catch (const OutOfBudget& e) {
      out = Outcome::undecided(e.message);
    } catch (const LinearityFault& e) {
      out = Outcome::violation(ViolationKind::LinearityFault, e.what());
    }
  });
  return out;
}

template <typename Body>
Inference runInference(Body body) {
  Inference out;
  runOnLargeStack([&] {
    try {
      std::optional<Environment> env = body();
      if (env) {
        out.status = Inference::Status::Success;
        out.environment = std::move(*env);
      } else {
        out.status = Inference::Status::Failure;
        out.message = "no environment produces the value";
      }
    } catch (const Violation& v) {
      out.status = Inference::Status::Violation;
      out.kind = v.kind;
      out.message = v.message;
    } catch (const OutOfBudget& e) {
      out.status = Inference::Status::Undecided;
      out.message = e.message;
    } catch (const LinearityFault& e) {
      out.status = Inference::Status::Violation;
      out.kind = ViolationKind::LinearityFault;
      out.message = e.what();
    }
  });
  return out;
}

}  // namespace

std::uint64_t defaultFuel() {
  const char* text = std::getenv("JEOPARDY_FUEL");
  if (text == nullptr || *text == '\0') return kDefaultFuel;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(text, &end, 10);
  if (*end != '\0' || *text == '-') return kDefaultFuel;
  return parsed;
}

std::string describe(const Inference& inference) {
  switch (inference.status) {
    case Inference::Status::Success:
      return "success " + toString(inference.environment);
    case Inference::Status::Failure:
      return "failure: " + inference.message;
    case Inference::Status::Violation:
      return std::string(toString(inference.kind)) + ": " + inference.message;
    case Inference::Status::Undecided:
      return "undecided: " + inference.message;
  }
  return {};
}

Outcome evalDown(const Program& program, const Environment& gamma, const Term& term,
                 const Options& options) {
  return runOutcome([&] { return Engine(program, options).eval(gamma, term); });
}

Outcome evalUp(const Program& program, const Environment& gamma, const FunctionRef& ref,
               const Pattern& argument, const Options& options) {
  return runOutcome(
      [&] { return Engine(program, options).app(gamma, ref, argument, true, ref.span); });
}

Inference inferEnvDown(const Program& program, const Term& term, const Value& value,
                       const Options& options) {
  return runInference([&] {
    Engine engine(program, options);
    return engine.infer(term, value);
  });
}

Inference inferEnvUp(const Program& program, const FunctionRef& ref, const Pattern& argument,
                     const Value& value, const Options& options) {
  return runInference([&] {
    Engine engine(program, options);
    return engine.inferApp(ref, argument, value, true, ref.span);
  });
}

Outcome apply(const Program& program, const FunctionRef& ref, const Value& input,
              const Options& options) {
  return runOutcome([&] {
    return Engine(program, options).app(Environment{}, ref, input, false, ref.span);
  });
}

Outcome runMain(const Program& program, const Value& input, bool inverted,
                const Options& options) {
  FunctionRef ref = program.main();
  if (inverted) ++ref.inversions;
  return apply(program, ref, input, options);
}

}  // namespace jeopardy::interp
