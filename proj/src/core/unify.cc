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

#include "jeopardy/unify.h"

namespace jeopardy {

namespace {

bool match(const Value& value, const Pattern& pattern, std::map<Name, Value, std::less<>>& out) {
  if (pattern.isVariable()) {
    auto [it, inserted] = out.emplace(pattern.name, value);
    return inserted || it->second == value;
  }
  if (value.name != pattern.name || value.args.size() != pattern.args.size()) return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    if (!match(value.args[i], pattern.args[i], out)) return false;
  }
  return true;
}

void appendPattern(const Pattern& pattern, std::string& out) {
  if (pattern.isVariable()) {
    out += pattern.name;
    return;
  }
  out += '[';
  out += pattern.name;
  for (const Pattern& arg : pattern.args) {
    out += ' ';
    appendPattern(arg, out);
  }
  out += ']';
}

}  // namespace

std::optional<Environment> unify(const Value& value, const Pattern& pattern) {
  std::map<Name, Value, std::less<>> bindings;
  if (!match(value, pattern, bindings)) return std::nullopt;
  Environment env;
  for (auto& [name, bound] : bindings) {
    env = env.compose(Environment::singleton(name, std::move(bound)));
  }
  return env;
}

std::optional<Value> substitute(const Pattern& pattern, const Environment& env) {
  if (pattern.isVariable()) {
    const Value* bound = env.lookup(pattern.name);
    if (bound == nullptr) return std::nullopt;
    return *bound;
  }
  std::vector<Value> args;
  args.reserve(pattern.args.size());
  for (const Pattern& arg : pattern.args) {
    auto v = substitute(arg, env);
    if (!v) return std::nullopt;
    args.push_back(std::move(*v));
  }
  return Value::constructor(pattern.name, std::move(args));
}

std::string toString(const Pattern& pattern) {
  std::string out;
  appendPattern(pattern, out);
  return out;
}

}  // namespace jeopardy
