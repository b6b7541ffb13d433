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

#include "large_stack.h"

#include <pthread.h>

#include <exception>

namespace jeopardy::interp {

namespace {

struct Job {
  const std::function<void()>* task;
  std::exception_ptr error;
};

void* trampoline(void* raw) {
  auto* job = static_cast<Job*>(raw);
  try {
    (*job->task)();
  } catch (...) {
    job->error = std::current_exception();
  }
  return nullptr;
}

}  // namespace

void runOnLargeStack(const std::function<void()>& task) {
  pthread_attr_t attr;
  if (pthread_attr_init(&attr) != 0) {
    task();
    return;
  }
  Job job{&task, nullptr};
  pthread_t thread;
  bool started = pthread_attr_setstacksize(&attr, kInterpreterStackBytes) == 0 &&
                 pthread_create(&thread, &attr, trampoline, &job) == 0;
  pthread_attr_destroy(&attr);
  if (!started) {
    task();
    return;
  }
  pthread_join(thread, nullptr);
  if (job.error) std::rethrow_exception(job.error);
}

}  // namespace jeopardy::interp
