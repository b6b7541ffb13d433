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

#include "jeopardy/unify.h"
#include "test_util.h"

namespace jeopardy {
namespace {

using testing::con;
using testing::val;
using testing::var;

TEST(Unify, VariableBindsWholeValue) {
  auto env = unify(val("[suc [zero]]"), var("n"));
  ASSERT_TRUE(env);
  EXPECT_EQ(*env, Environment::singleton("n", val("[suc [zero]]")));
}

TEST(Unify, ConstructorMatchesPointwise) {
  auto env = unify(val("([suc [zero]], [zero])"), con("pair", {con("suc", {var("k")}), var("n")}));
  ASSERT_TRUE(env);
  EXPECT_EQ(*env, (Environment{{"k", val("[zero]")}, {"n", val("[zero]")}}));
}

TEST(Unify, HeadOrArityMismatchFails) {
  EXPECT_FALSE(unify(val("[zero]"), con("suc", {var("x")})));
  EXPECT_FALSE(unify(val("[suc [zero]]"), con("suc", {})));
}

// Repeated variables only match equal subvalues.
TEST(Unify, RepeatedVariablesMustAgree) {
  Pattern twice = con("pair", {var("a"), var("a")});
  EXPECT_TRUE(unify(val("([zero], [zero])"), twice));
  EXPECT_FALSE(unify(val("([zero], [suc [zero]])"), twice));
}

TEST(Substitute, InvertsUnification) {
  Pattern p = con("pair", {con("suc", {var("k")}), var("n")});
  Value v = val("([suc [suc [zero]]], [zero])");
  auto env = unify(v, p);
  ASSERT_TRUE(env);
  EXPECT_EQ(substitute(p, *env), v);
}

TEST(Substitute, UnboundVariableGivesNothing) {
  EXPECT_FALSE(substitute(var("x"), Environment{}));
}

TEST(Unify, PrintsRawSyntax) {
  EXPECT_EQ(toString(con("pair", {var("a"), con("zero")})), "[pair a [zero]]");
}

}  // namespace
}  // namespace jeopardy
