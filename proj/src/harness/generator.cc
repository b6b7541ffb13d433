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

#include "jeopardy/generator.h"

#include <algorithm>
#include <stdexcept>

namespace jeopardy::harness {

ValueGenerator::ValueGenerator(const Program& program, std::uint64_t seed)
    : program_(program), rng_(seed) {
  // Least fixpoint of  min(t) = 1 + min over constructors of max min(arg).
  bool changed = true;
  while (changed) {
    changed = false;
    for (const DataType& d : program_.datatypes()) {
      for (const Constructor& c : d.constructors) {
        int deepest = 0;
        bool known = true;
        for (const Name& arg : c.argTypes) {
          auto it = minimum_.find(arg);
          if (it == minimum_.end()) {
            known = false;
            break;
          }
          deepest = std::max(deepest, it->second);
        }
        if (!known) continue;
        auto [it, inserted] = minimum_.try_emplace(d.name, deepest + 1);
        if (inserted || deepest + 1 < it->second) {
          it->second = deepest + 1;
          changed = true;
        }
      }
    }
  }
}

int ValueGenerator::minimumDepth(const Name& type) const {
  auto it = minimum_.find(type);
  return it == minimum_.end() ? 0 : it->second;
}

std::uint64_t ValueGenerator::below(std::uint64_t bound) { return rng_() % bound; }

Value ValueGenerator::value(const Name& type, int maxDepth) {
  const DataType* d = program_.findType(type);
  if (d == nullptr || minimumDepth(type) == 0) {
    throw std::invalid_argument("cannot generate values of '" + type + "'");
  }
  int budget = std::max(maxDepth, minimumDepth(type));
  std::vector<const Constructor*> fitting;
  for (const Constructor& c : d->constructors) {
    bool fits = std::all_of(c.argTypes.begin(), c.argTypes.end(), [&](const Name& arg) {
      int m = minimumDepth(arg);
      return m > 0 && m <= budget - 1;
    });
    if (fits) fitting.push_back(&c);
  }
  const Constructor& chosen = *fitting[below(fitting.size())];
  std::vector<Value> args;
  for (const Name& arg : chosen.argTypes) args.push_back(value(arg, budget - 1));
  return Pattern::constructor(chosen.name, std::move(args));
}

Environment ValueGenerator::environment(const TypingEnv& sigma, int maxDepth) {
  Environment out;
  for (const auto& [name, type] : sigma) {
    out = out.compose(Environment::singleton(name, value(type, maxDepth)));
  }
  return out;
}

}  // namespace jeopardy::harness
