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

#include "jeopardy/parser.h"
#include "jeopardy/pipeline.h"
#include "jeopardy/printer.h"
#include "test_util.h"

namespace jeopardy::frontend {
namespace {

using jeopardy::testing::con;
using jeopardy::testing::corpusProgram;
using jeopardy::testing::val;
using jeopardy::testing::var;

TEST(Printer, ValuesUseTupleAndListSugar) {
  EXPECT_EQ(printValue(val("[suc [zero]]")), "[suc [zero]]");
  EXPECT_EQ(printValue(val("[pair [zero] [suc [zero]]]")), "([zero], [suc [zero]])");
  EXPECT_EQ(printValue(val("[cons [zero] [cons [zero] [nil]]]")), "[zero] : [zero] : []");
  EXPECT_EQ(printValue(val("[cons ([zero], []) [nil]]")), "([zero], []) : []");
}

TEST(Printer, NestedConsOnTheLeftIsParenthesized) {
  Value v = con("cons", {con("cons", {con("zero"), con("nil")}), con("nil")});
  EXPECT_EQ(printValue(v), "([zero] : []) : []");
  EXPECT_EQ(parseValue(printValue(v)), v);
}

TEST(Printer, PatternsAreRaw) {
  EXPECT_EQ(printPattern(con("pair", {var("a"), con("nil")})), "[pair a [nil]]");
}

TEST(Printer, CoreTerm) {
  Program p = corpusProgram("arithmetic.jeo");
  EXPECT_EQ(printTerm(p.findFunction("add")->body),
            "case %0 : pair of\n"
            "  [pair [zero] n] -> n;\n"
            "  [pair [suc k] n] -> add [pair k [suc n]]");
}

TEST(Printer, CoreProgramReparses) {
  Program p = corpusProgram("invertibles.jeo");
  CompileOptions quoting;
  quoting.lex.allowFreshNames = true;
  CompileResult again = compile(printProgram(p), quoting);
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(*again.program, p);
}

// Term sugar survives; patterns print raw.
TEST(Printer, SurfaceRoundTripKeepsSugar) {
  const char* source =
      "data nat = [zero] [suc nat].\n"
      "data pair = [pair nat nat].\n"
      "data list = [nil] [cons nat list].\n"
      "h (p : pair) : pair = let (a, b) : pair = swp p in (b, a).\n"
      "g (x : list) : list = case x : list of [] -> []; y : ys -> [suc y] : g ys.\n"
      "main (invert h).\n";
  auto decls = parseProgram(source);
  std::string printed = printSurface(decls);
  EXPECT_EQ(parseProgram(printed), decls);
  EXPECT_NE(printed.find("let [pair a b] : pair = swp p in (b, a)"), std::string::npos) << printed;
}

}  // namespace
}  // namespace jeopardy::frontend
