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

#include "jeopardy/environment.h"
#include "test_util.h"

namespace jeopardy {
namespace {

using testing::val;

TEST(Environment, ComposeIsDisjointUnion) {
  Environment a = Environment::singleton("x", val("[zero]"));
  Environment b = Environment::singleton("y", val("[suc [zero]]"));
  Environment both = a.compose(b);
  EXPECT_EQ(both.size(), 2u);
  EXPECT_EQ(*both.lookup("y"), val("[suc [zero]]"));
  EXPECT_EQ(both, b.compose(a));
}

TEST(Environment, OverlapIsALinearityFault) {
  Environment a = Environment::singleton("x", val("[zero]"));
  try {
    (void)a.compose(Environment::singleton("x", val("[zero]")));
    FAIL() << "expected LinearityFault";
  } catch (const LinearityFault& fault) {
    EXPECT_EQ(fault.variable(), "x");
  }
}

TEST(Environment, ShadowingPrefersTheRightOperand) {
  Environment outer{{"x", val("[zero]")}, {"y", val("[zero]")}};
  Environment inner = Environment::singleton("x", val("[suc [zero]]"));
  Environment mixed = outer.shadowedBy(inner);
  EXPECT_EQ(*mixed.lookup("x"), val("[suc [zero]]"));
  EXPECT_EQ(*mixed.lookup("y"), val("[zero]"));
}

TEST(Environment, SubtractIgnoresMissingKeys) {
  Environment env{{"a", val("[zero]")}, {"b", val("[zero]")}};
  Environment rest = env.subtract(std::vector<Name>{"a", "zz"});
  EXPECT_EQ(rest.domain(), std::set<Name>{"b"});
}

TEST(Environment, PrintsKeySorted) {
  Environment env{{"b", val("[zero]")}, {"a", val("[suc [zero]]")}};
  EXPECT_EQ(toString(env), "{a ↦ [suc [zero]], b ↦ [zero]}");
  TypingEnv sigma{{"n", "nat"}};
  EXPECT_EQ(toString(sigma), "{n ↦ nat}");
}

}  // namespace
}  // namespace jeopardy
