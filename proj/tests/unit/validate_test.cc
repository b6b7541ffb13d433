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

#include "jeopardy/pipeline.h"
#include "jeopardy/validate.h"
#include "test_util.h"

namespace jeopardy::frontend {
namespace {

using jeopardy::testing::kNatPair;
using jeopardy::testing::val;

std::vector<std::string> codes(std::string_view source) {
  std::vector<std::string> out;
  for (const Diagnostic& d : compile(source).diagnostics) out.push_back(d.code);
  return out;
}

const std::string kInc = std::string(kNatPair) + "inc (n : nat) : nat = [suc n].\n";

TEST(Validate, WellFormedProgramIsClean) { EXPECT_TRUE(codes(kInc + "main inc.").empty()); }

// Redeclaring nat also redeclares its constructor zero.
TEST(Validate, ReportsEachProblem) {
  EXPECT_EQ(codes(kInc + "bad (n : nat) : nat = [succ n].\nmain inc."),
            std::vector<std::string>{"V001"});
  EXPECT_EQ(codes(kInc + "bad (n : nat) : nat = [suc].\nmain inc."),
            std::vector<std::string>{"V002"});
  EXPECT_EQ(codes(kInc + "bad (n : nat) : natural = n.\nmain inc."),
            std::vector<std::string>{"V003"});
  EXPECT_EQ(codes(kInc + "main dec."), std::vector<std::string>{"V004"});
  EXPECT_EQ(codes(kInc + "data nat = [zero].\nmain inc."), (std::vector<std::string>{"V005", "V005"}));
  EXPECT_EQ(codes(kInc), std::vector<std::string>{"V006"});
  EXPECT_EQ(codes(kInc + "main inc.\nmain inc."), std::vector<std::string>{"V006"});
}

TEST(Validate, SeveralProblemsAtOnce) {
  auto found = codes(kInc + "bad (n : nat) : nat = [succ [suc]].\nmain dec.");
  EXPECT_EQ(found, (std::vector<std::string>{"V001", "V002", "V004"}));
}

TEST(Validate, ValueHasType) {
  Program p = jeopardy::testing::compileOk(kInc + "main inc.");
  EXPECT_TRUE(valueHasType(p, val("[suc [zero]]"), "nat"));
  EXPECT_TRUE(valueHasType(p, val("([zero], [suc [zero]])"), "pair"));
  EXPECT_FALSE(valueHasType(p, val("([zero], [suc [zero]])"), "nat"));
  EXPECT_FALSE(valueHasType(p, val("[suc [zero] [zero]]"), "nat"));
  EXPECT_FALSE(valueHasType(p, val("[true]"), "nat"));
}

}  // namespace
}  // namespace jeopardy::frontend
