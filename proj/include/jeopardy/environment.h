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

#include <initializer_list>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "jeopardy/ast.h"

namespace jeopardy {

// Two environments that were required to be disjoint share a variable. In a
// checked program this never happens; it signals an internal invariant breach.
class LinearityFault : public std::runtime_error {
 public:
  explicit LinearityFault(Name variable);
  const Name& variable() const { return variable_; }

 private:
  Name variable_;
};

// Finite map from variable names to V. Iteration is key-sorted, equality is
// extensional. Used for value environments (Gamma) and typing environments
// (Sigma).
template <typename V>
class Bindings {
 public:
  using Map = std::map<Name, V, std::less<>>;
  using const_iterator = typename Map::const_iterator;

  Bindings() = default;
  Bindings(std::initializer_list<std::pair<const Name, V>> init) : map_(init) {}

  static Bindings singleton(Name name, V value) {
    Bindings b;
    b.map_.emplace(std::move(name), std::move(value));
    return b;
  }

  const V* lookup(std::string_view name) const {
    auto it = map_.find(name);
    return it == map_.end() ? nullptr : &it->second;
  }
  bool contains(std::string_view name) const { return map_.find(name) != map_.end(); }
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  const_iterator begin() const { return map_.begin(); }
  const_iterator end() const { return map_.end(); }

  std::set<Name> domain() const {
    std::set<Name> out;
    for (const auto& [name, _] : map_) out.insert(name);
    return out;
  }

  // Disjoint union; throws LinearityFault when the domains overlap.
  Bindings compose(const Bindings& other) const {
    Bindings out = *this;
    for (const auto& [name, value] : other.map_) {
      if (!out.map_.emplace(name, value).second) throw LinearityFault(name);
    }
    return out;
  }

  // Union where bindings of `other` replace bindings of this environment.
  Bindings shadowedBy(const Bindings& other) const {
    Bindings out = *this;
    for (const auto& [name, value] : other.map_) out.map_.insert_or_assign(name, value);
    return out;
  }

  // Removes the given keys; absent keys are ignored.
  template <typename Names>
  Bindings subtract(const Names& names) const {
    Bindings out = *this;
    for (const auto& name : names) {
      auto it = out.map_.find(name);
      if (it != out.map_.end()) out.map_.erase(it);
    }
    return out;
  }

  friend bool operator==(const Bindings& lhs, const Bindings& rhs) {
    return lhs.map_ == rhs.map_;
  }

 private:
  Map map_;
};

using Environment = Bindings<Value>;
using TypingEnv = Bindings<Name>;

// "{a ↦ [zero], b ↦ [suc [zero]]}" with raw constructor syntax.
std::string toString(const Environment& env);
std::string toString(const TypingEnv& env);

}  // namespace jeopardy
