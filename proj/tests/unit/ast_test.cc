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

#include "jeopardy/ast.h"
#include "test_util.h"

namespace jeopardy {
namespace {

using testing::con;
using testing::var;

TEST(Names, ValidNamesFollowTheLexicalClass) {
  EXPECT_TRUE(isValidName("fib-pair"));
  EXPECT_TRUE(isValidName("x'"));
  EXPECT_TRUE(isValidName("map_f2"));
  EXPECT_FALSE(isValidName("Zero"));
  EXPECT_FALSE(isValidName("2x"));
  EXPECT_FALSE(isValidName("case"));
  EXPECT_FALSE(isValidName(""));
}

TEST(Names, FreshNamesAreNotValidSourceNames) {
  EXPECT_TRUE(isFreshName("%0"));
  EXPECT_TRUE(isFreshName("%12"));
  EXPECT_FALSE(isFreshName("%"));
  EXPECT_FALSE(isValidName("%0"));
}

TEST(Pattern, GroundnessAndValueNarrowing) {
  Pattern ground = con("suc", {con("zero")});
  Pattern open = con("pair", {var("a"), con("zero")});
  EXPECT_TRUE(ground.isGround());
  EXPECT_FALSE(open.isGround());
  EXPECT_TRUE(asValue(ground).has_value());
  EXPECT_FALSE(asValue(open).has_value());
}

TEST(Pattern, EqualityIgnoresSpans) {
  Pattern a = Pattern::variable("x", SourceSpan{1, 1, 1, 2});
  Pattern b = Pattern::variable("x", SourceSpan{7, 3, 7, 4});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, Pattern::variable("y"));
}

TEST(Pattern, VarsKeepMultiplicity) {
  Pattern p = con("pair", {var("a"), con("suc", {var("a")})});
  EXPECT_EQ(patternVars(p), (std::vector<Name>{"a", "a"}));
}

TEST(FunctionRef, ParityDecidesDirection) {
  EXPECT_FALSE((FunctionRef{"f", 0, {}}).runsInverted());
  EXPECT_TRUE((FunctionRef{"f", 1, {}}).runsInverted());
  EXPECT_FALSE((FunctionRef{"f", 2, {}}).runsInverted());
}

TEST(Term, FreeVarsRemoveBranchBindings) {
  std::vector<CaseBranch> branches;
  branches.push_back({con("pair", {var("a"), var("b")}), Term::fromPattern(con("pair", {var("b"), var("c")}))});
  Term t = Term::caseOf(Term::fromPattern(var("p")), "pair", std::move(branches));
  EXPECT_EQ(freeVars(t), (std::vector<Name>{"p", "c"}));
}

TEST(Program, IndexesDeclarations) {
  Program p = testing::compileOk(std::string(testing::kNatPair) +
                                 "id (n : nat) : nat = n.\nmain id.\n");
  ASSERT_NE(p.findType("pair"), nullptr);
  EXPECT_EQ(p.findType("list"), nullptr);
  ASSERT_NE(p.findFunction("id"), nullptr);
  auto suc = p.findConstructor("suc");
  ASSERT_TRUE(suc.has_value());
  EXPECT_EQ(suc->type->name, "nat");
  EXPECT_EQ(suc->constructor->argTypes, std::vector<Name>{"nat"});
  EXPECT_EQ(p.main().base, "id");
}

}  // namespace
}  // namespace jeopardy
