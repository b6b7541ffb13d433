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

#include "jeopardy/surface.h"

namespace jeopardy::frontend {

bool operator==(const SurfaceTerm& lhs, const SurfaceTerm& rhs) {
  return lhs.kind == rhs.kind && lhs.name == rhs.name && lhs.function == rhs.function &&
         lhs.items == rhs.items && lhs.pattern == rhs.pattern &&
         lhs.annotation == rhs.annotation && lhs.branches == rhs.branches;
}

bool operator==(const SurfaceBranch& lhs, const SurfaceBranch& rhs) {
  return lhs.pattern == rhs.pattern && lhs.body == rhs.body;
}

bool operator==(const SurfaceClause& lhs, const SurfaceClause& rhs) {
  return lhs.name == rhs.name && lhs.param == rhs.param && lhs.argType == rhs.argType &&
         lhs.resultType == rhs.resultType && lhs.body == rhs.body;
}

std::optional<Pattern> asPattern(const SurfaceTerm& term) {
  using Kind = SurfaceTerm::Kind;
  auto argsOf = [](const std::vector<SurfaceTerm>& items) -> std::optional<std::vector<Pattern>> {
    std::vector<Pattern> out;
    out.reserve(items.size());
    for (const SurfaceTerm& item : items) {
      auto p = asPattern(item);
      if (!p) return std::nullopt;
      out.push_back(std::move(*p));
    }
    return out;
  };
  switch (term.kind) {
    case Kind::Variable:
      return Pattern::variable(term.name, term.span);
    case Kind::Nil:
      return Pattern::constructor("nil", {}, term.span);
    case Kind::Constructor:
    case Kind::Tuple:
    case Kind::Cons: {
      auto args = argsOf(term.items);
      if (!args) return std::nullopt;
      Name name = term.kind == Kind::Constructor ? term.name
                  : term.kind == Kind::Tuple     ? Name("pair")
                                                 : Name("cons");
      return Pattern::constructor(std::move(name), std::move(*args), term.span);
    }
    case Kind::Application:
    case Kind::Case:
    case Kind::Let:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace jeopardy::frontend
