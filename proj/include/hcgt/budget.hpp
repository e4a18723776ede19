// Copyright 2026 The hcgt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Process-wide wall-clock budget. Long loops call Budget::check(), which
// throws ResourceLimitError once the deadline has passed. Worker threads
// see the same deadline.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <string>

#include "hcgt/errors.hpp"

namespace hcgt {

class Budget {
public:
  using clock = std::chrono::steady_clock;

  /// seconds <= 0 clears the deadline.
  static void set(double seconds) {
    if (seconds <= 0) {
      deadline().store(0);
      return;
    }
    const auto d = clock::now() + std::chrono::duration_cast<clock::duration>(
                                      std::chrono::duration<double>(seconds));
    deadline().store(d.time_since_epoch().count());
  }

  static void clear() { deadline().store(0); }

  static bool expired() {
    const auto d = deadline().load(std::memory_order_relaxed);
    return d != 0 && clock::now().time_since_epoch().count() > d;
  }

  static void check(const char *where) {
    if (expired())
      throw ResourceLimitError(std::string("time budget exhausted in ") + where, -1, 0);
  }

private:
  static std::atomic<clock::rep> &deadline() {
    static std::atomic<clock::rep> d{0};
    return d;
  }
};

/// Sets a deadline for the lifetime of the object.
class ScopedBudget {
public:
  explicit ScopedBudget(double seconds) { Budget::set(seconds); }
  ~ScopedBudget() { Budget::clear(); }
  ScopedBudget(const ScopedBudget &) = delete;
  ScopedBudget &operator=(const ScopedBudget &) = delete;
};

} // namespace hcgt
