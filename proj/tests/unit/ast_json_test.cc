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

#include "jeopardy/ast_json.h"
#include "test_util.h"

namespace jeopardy::frontend {
namespace {

using jeopardy::testing::con;
using jeopardy::testing::corpusProgram;
using jeopardy::testing::var;
using nlohmann::json;

TEST(AstJson, Patterns) {
  json j = patternToJson(con("suc", {var("n")}));
  EXPECT_EQ(j["kind"], "con");
  EXPECT_EQ(j["name"], "suc");
  EXPECT_EQ(j["args"][0]["kind"], "var");
  EXPECT_EQ(j["args"][0]["name"], "n");
}

TEST(AstJson, ProgramLayout) {
  json j = programToJson(corpusProgram("arithmetic.jeo"));
  EXPECT_EQ(j["schemaVersion"], kAstSchemaVersion);
  ASSERT_EQ(j["datatypes"].size(), 2u);
  EXPECT_EQ(j["datatypes"][0]["constructors"][1]["args"], json::array({"nat"}));

  const json& add = j["functions"][0];
  EXPECT_EQ(add["kind"], "fun");
  EXPECT_EQ(add["argType"], "pair");
  EXPECT_EQ(add["resultType"], "nat");
  EXPECT_EQ(add["body"]["kind"], "case");
  EXPECT_EQ(add["body"]["branches"].size(), 2u);
  EXPECT_EQ(add["body"]["branches"][1]["body"]["kind"], "app");
  EXPECT_EQ(add["span"]["line"], 6);

  EXPECT_EQ(j["mains"][0]["ref"], (json{{"base", "add"}, {"inversions", 0}}));
}

TEST(AstJson, EmitIsStable) {
  Program p = corpusProgram("invertibles.jeo");
  std::string once = emitAst(p);
  EXPECT_EQ(once, emitAst(p));
  EXPECT_EQ(once.back(), '\n');
  EXPECT_EQ(json::parse(once), programToJson(p));
  // Keys are sorted, so "datatypes" precedes "functions".
  EXPECT_LT(once.find("\"datatypes\""), once.find("\"functions\""));
}

}  // namespace
}  // namespace jeopardy::frontend
