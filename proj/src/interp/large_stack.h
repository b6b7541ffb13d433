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

#include <cstddef>
#include <functional>

namespace jeopardy::interp {

inline constexpr std::size_t kInterpreterStackBytes = std::size_t{1} << 30;

// Runs the task to completion on a fresh thread with a large stack, so deep
// but finite recursions in user programs do not overflow the native stack.
// Falls back to the calling thread if such a thread cannot be created.
void runOnLargeStack(const std::function<void()>& task);

}  // namespace jeopardy::interp
