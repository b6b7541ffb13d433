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

#include <gtest/gtest.h>

#include "jeopardy/generator.h"
#include "jeopardy/validate.h"
#include "test_util.h"

namespace jeopardy::harness {
namespace {

using jeopardy::testing::corpusProgram;

int depth(const Value& v) {
  int deepest = 0;
  for (const Value& a : v.args) deepest = std::max(deepest, depth(a));
  return deepest + 1;
}

const Program& invertibles() {
  static const Program p = corpusProgram("invertibles.jeo");
  return p;
}

TEST(Generator, SameSeedSameSequence) {
  ValueGenerator a(invertibles(), 7), b(invertibles(), 7), c(invertibles(), 8);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    Value x = a.value("tree");
    EXPECT_EQ(x, b.value("tree"));
    differs = differs || !(x == c.value("tree"));
  }
  EXPECT_TRUE(differs);
}

TEST(Generator, ValuesAreWellTypedAndBounded) {
  ValueGenerator gen(invertibles(), 42);
  for (const char* type : {"bool", "nat", "pair", "list", "tree"}) {
    for (int i = 0; i < 100; ++i) {
      Value v = gen.value(type, 4);
      EXPECT_TRUE(frontend::valueHasType(invertibles(), v, type)) << type;
      EXPECT_LE(depth(v), 4) << type;
    }
  }
}

TEST(Generator, MinimumDepth) {
  EXPECT_EQ(ValueGenerator(invertibles(), 0).minimumDepth("nat"), 1);
  EXPECT_EQ(ValueGenerator(invertibles(), 0).minimumDepth("pair"), 2);
  Program empty = jeopardy::testing::compileOk(
      "data nat = [zero] [suc nat].\ndata loop = [more loop].\n"
      "id (n : nat) : nat = n.\nmain id.\n");
  EXPECT_EQ(ValueGenerator(empty, 0).minimumDepth("loop"), 0);
}

TEST(Generator, TooSmallBudgetGivesShallowestValue) {
  ValueGenerator gen(invertibles(), 1);
  EXPECT_EQ(gen.value("pair", 1), jeopardy::testing::val("([zero], [zero])"));
}

TEST(Generator, EnvironmentCoversSigma) {
  ValueGenerator gen(invertibles(), 3);
  Environment env = gen.environment(TypingEnv{{"a", "nat"}, {"b", "bool"}});
  EXPECT_EQ(env.domain(), (std::set<Name>{"a", "b"}));
  EXPECT_TRUE(frontend::valueHasType(invertibles(), *env.lookup("b"), "bool"));
}

}  // namespace
}  // namespace jeopardy::harness
