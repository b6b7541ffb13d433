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

#include <cstdint>
#include <map>
#include <random>

#include "jeopardy/ast.h"
#include "jeopardy/environment.h"

namespace jeopardy::harness {

inline constexpr int kMaxValueDepth = 6;

// Seeded generator of well-typed values. A value's depth counts constructor
// nesting: [zero] has depth 1, [suc [zero]] depth 2. The same seed yields the
// same sequence on every platform.
class ValueGenerator {
 public:
  ValueGenerator(const Program& program, std::uint64_t seed);

  // A value of the datatype with depth at most maxDepth, or the shallowest
  // value if none fits.
  Value value(const Name& type, int maxDepth = kMaxValueDepth);
  Environment environment(const TypingEnv& sigma, int maxDepth = kMaxValueDepth);

  // Depth of the shallowest value of the type; 0 when it is uninhabited.
  int minimumDepth(const Name& type) const;

 private:
  std::uint64_t below(std::uint64_t bound);

  const Program& program_;
  std::mt19937_64 rng_;
  std::map<Name, int> minimum_;
};

}  // namespace jeopardy::harness
