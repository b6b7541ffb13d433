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

#include "jeopardy/desugar.h"
#include "jeopardy/parser.h"
#include "test_util.h"

namespace jeopardy::frontend {
namespace {

using jeopardy::testing::con;
using jeopardy::testing::kNatPair;
using jeopardy::testing::var;

DesugarResult run(std::string_view source) { return desugar(parseProgram(source)); }

std::vector<std::string> codes(const std::vector<Diagnostic>& ds) {
  std::vector<std::string> out;
  for (const Diagnostic& d : ds) out.push_back(d.code);
  return out;
}

TEST(Desugar, ClauseGroupBecomesCaseOnFreshParameter) {
  auto r = run(std::string(kNatPair) +
               "add (([zero], n) : pair) : nat = n.\n"
               "add ([suc k], n) = [suc (add (k, n))].\n");
  ASSERT_TRUE(r.diagnostics.empty());
  const Function* add = r.program.findFunction("add");
  ASSERT_NE(add, nullptr);
  EXPECT_EQ(add->param, var("%0"));
  EXPECT_EQ(add->argType, "pair");
  EXPECT_EQ(add->resultType, "nat");
  ASSERT_TRUE(add->body.isCase());
  EXPECT_EQ(add->body.annotation, "pair");
  ASSERT_EQ(add->body.branches.size(), 2u);
  EXPECT_EQ(add->body.branches[0].pattern, con("pair", {con("zero"), var("n")}));

  // [suc (add (k, n))] nests a case binding the call result at suc's argument type.
  const Term& second = add->body.branches[1].body;
  ASSERT_TRUE(second.isCase());
  EXPECT_EQ(second.annotation, "nat");
  ASSERT_TRUE(second.selector->isApplication());
  EXPECT_EQ(second.selector->function.base, "add");
  EXPECT_EQ(second.selector->pattern, con("pair", {var("k"), var("n")}));
  ASSERT_EQ(second.branches.size(), 1u);
  EXPECT_EQ(second.branches[0].body, Term::fromPattern(con("suc", {second.branches[0].pattern})));
}

TEST(Desugar, SingleClauseKeepsItsPattern) {
  auto r = run(std::string(kNatPair) + "swp ((a, b) : pair) : pair = (b, a).\n");
  ASSERT_TRUE(r.diagnostics.empty());
  const Function* f = r.program.findFunction("swp");
  EXPECT_EQ(f->param, con("pair", {var("a"), var("b")}));
  EXPECT_EQ(f->body, Term::fromPattern(con("pair", {var("b"), var("a")})));
}

TEST(Desugar, LetIsACase) {
  auto r = run(std::string(kNatPair) +
               "swp ((a, b) : pair) : pair = (b, a).\n"
               "twice (p : pair) : pair = let q : pair = swp p in swp q.\n");
  ASSERT_TRUE(r.diagnostics.empty());
  const Term& body = r.program.findFunction("twice")->body;
  ASSERT_TRUE(body.isCase());
  EXPECT_EQ(body.annotation, "pair");
  EXPECT_EQ(body.branches.at(0).pattern, var("q"));
  EXPECT_TRUE(body.branches[0].body.isApplication());
}

TEST(Desugar, InvertedCallArgumentUsesResultType) {
  auto r = run(std::string(kNatPair) +
               "inc (n : nat) : pair = ([zero], n).\n"
               "back (p : pair) : nat = (invert inc) (swp p).\n"
               "swp ((a, b) : pair) : pair = (b, a).\n");
  const Term& body = r.program.findFunction("back")->body;
  ASSERT_TRUE(body.isCase());
  EXPECT_EQ(body.annotation, "pair");
}

// A let without annotation takes the type of a variable or call; otherwise V009.
TEST(Desugar, Diagnostics) {
  EXPECT_EQ(codes(run(std::string(kNatPair) + "f (n : nat) : nat = n.\ng (n : nat) : nat = n.\nf n = n.\n")
                      .diagnostics),
            std::vector<std::string>{"V007"});
  EXPECT_EQ(codes(run(std::string(kNatPair) +
                      "f ([zero] : nat) : nat = [zero].\nf ([suc n] : pair) : nat = n.\n")
                      .diagnostics),
            std::vector<std::string>{"V008"});
  EXPECT_EQ(codes(run(std::string(kNatPair) + "f (n : nat) : nat = let m = x in n.\n")
                      .diagnostics),
            std::vector<std::string>{"V009"});
}

}  // namespace
}  // namespace jeopardy::frontend
